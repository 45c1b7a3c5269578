#pragma once

#include <vector>

#include "morse/partition.hpp"
#include "morse/permutation.hpp"

namespace morse {

// Map beta : {0, ..., n-1} -> {0, ..., k-1} with fibers of sizes n_1, ..., n_k.
// These label the critical points of the slice and index the module bases.
struct BetaMap {
  std::vector<int> assign;

  bool operator==(const BetaMap& o) const { return assign == o.assign; }
  bool operator<(const BetaMap& o) const { return assign < o.assign; }
  std::string to_string() const;  // 1-based tuple, e.g. "(1,2,2)"
};

bool is_valid_beta(const Partition& p, const BetaMap& b);

/// The monotone map beta_0 (letters of block i map to i).
BetaMap beta_zero(const Partition& p);

/// All BetaMaps in lexicographic order on assignment tuples; beta_0 is first
/// and the list length equals multinomial_dim(p).
std::vector<BetaMap> enumerate_beta(const Partition& p);

/// Index of b in enumerate_beta order (binary search; the list is sorted).
int beta_index(const std::vector<BetaMap>& list, const BetaMap& b);

/// Left action w . beta = beta o w^{-1}.
BetaMap sigma_action_on_beta(const Permutation& w, const BetaMap& b);

/// Post-composition g o beta for g a permutation of the k blocks.
BetaMap relabel_blocks(const Permutation& g, const BetaMap& b);

/// Minimal-length representatives of the left cosets w (S_{n_1} x ... x S_{n_k})
/// in S_n, ordered compatibly with enumerate_beta: reps[i] . beta_0 = betas[i].
std::vector<Permutation> min_coset_reps(const Partition& p);

/// The minimal-length w with w . beta_0 == b.
Permutation coset_rep_for_beta(const Partition& p, const BetaMap& b);

}  // namespace morse
