#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace morse {

// Partition n = n_1 + ... + n_k with parts stored in ascending order.
// The distinct part sizes define the l "colors"; color j has multiplicity
// m_j, and parts of one color occupy consecutive indices.  Letters
// {0, ..., n-1} are grouped into consecutive blocks of sizes n_1, ..., n_k.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses a comma-separated list, e.g. "1,2,2".
  static Partition parse(const std::string& text);

  int n() const { return n_; }
  int k() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }

  int num_colors() const { return static_cast<int>(distinct_.size()); }
  const std::vector<int>& distinct_sizes() const { return distinct_; }
  const std::vector<int>& multiplicities() const { return mult_; }

  /// Color index (0-based) of part i.
  int color_of_part(int i) const { return color_[i]; }
  /// First part index of color j; parts of color j are [begin, begin + m_j).
  int color_begin(int j) const { return color_begin_[j]; }

  /// First letter of block i; letters of block i are [offset, offset + n_i).
  int block_offset(int i) const { return offset_[i]; }
  /// Block index containing letter x.
  int block_of_letter(int x) const;

  /// 0-based adjacent-transposition indices a such that letters a, a+1 lie in
  /// one block; these generate the Young subgroup S_{n_1} x ... x S_{n_k}.
  std::vector<int> young_generators() const;

  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> distinct_, mult_, color_, color_begin_, offset_;
  int n_ = 0;
};

/// n! / (n_1! * ... * n_k!), exact; throws for n > 20 (would overflow).
std::uint64_t multinomial_dim(const Partition& p);

/// All partitions of n in deterministic (lexicographic, parts ascending) order.
std::vector<Partition> all_partitions(int n);

}  // namespace morse
