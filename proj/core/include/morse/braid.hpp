#pragma once

#include <string>
#include <vector>

#include "morse/partition.hpp"
#include "morse/permutation.hpp"

namespace morse {

// Word in the standard braid generators.  Letters are nonzero signed
// integers: +i stands for sigma_i and -i for its inverse, 1 <= i < strands.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int strands_, std::vector<int> letters_);

  bool empty() const { return letters.empty(); }
  size_t length() const { return letters.size(); }
};

/// Parses whitespace-separated signed generator indices, e.g. "2 -1 3".
BraidWord parse_braid(int strands, const std::string& text);
std::string braid_str(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord braid_inverse(const BraidWord& w);

/// Cancels adjacent sigma_i sigma_i^{-1} pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Image under B_n -> S_n, sigma_i^{+-1} -> s_i; a homomorphism for the
/// word-order product of adjacent transpositions.
Permutation strand_permutation(const BraidWord& w);

/// The homomorphism sigma_i -> sigma_i^{-1} (flips every letter's sign).
BraidWord invert_gens_obar(const BraidWord& w);

/// Cabling B_k -> B_n: strand i becomes a rope of n_i parallel strands.
/// kappa_i maps to the positive block transposition of the adjacent ropes of
/// sizes n_i, n_{i+1}; generator indices use partial sums of the part sizes.
BraidWord cabling_zeta(const Partition& p, const BraidWord& w);

/// Permutation of {0, ..., n-1} moving the letter blocks of p as ropes,
/// according to g on block indices; offsets within a rope are preserved.
Permutation block_permutation(const Partition& p, const Permutation& g);

}  // namespace morse
