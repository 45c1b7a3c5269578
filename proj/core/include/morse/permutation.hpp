#pragma once

#include <string>
#include <vector>

namespace morse {

// Permutation of {0, ..., n-1} in one-line notation.  Products compose as
// functions: (u * v)(x) = u(v(x)), so v acts first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  /// Transposition of adjacent positions a, a+1 (0-based); this is the simple
  /// reflection s_{a+1} in the 1-based generator numbering.
  static Permutation adjacent_transposition(int n, int a);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation operator*(const Permutation& v) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Coxeter length = number of inversions.
  int length() const;

  /// Cycle lengths sorted descending (a partition shape of n).
  std::vector<int> cycle_type() const;

  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  /// 1-based one-line notation, e.g. "2 1 3".
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

/// All permutations of n letters in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// Indices a_0, ..., a_{L-1} of adjacent transpositions with
/// w == adj(a_0) * adj(a_1) * ... * adj(a_{L-1}) and L == w.length().
std::vector<int> reduced_word(const Permutation& w);

}  // namespace morse
