#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morse/braid.hpp"
#include "morse/partition.hpp"
#include "morse/permutation.hpp"

namespace morse {

// Braid on the k parts of a partition, colored by the l distinct part sizes.
// Membership in the colored braid group means the underlying permutation
// preserves every color class.
struct ColoredBraid {
  Partition partition;
  BraidWord word;  // on k strands

  ColoredBraid(Partition p, BraidWord w);

  /// Color (0-based) of strand i.
  int color(int i) const { return partition.color_of_part(i); }
};

/// True iff strand_permutation(word) maps each color class to itself.
bool preserves_colors(const ColoredBraid& c);

/// Restriction of the underlying permutation to each color class, renumbered
/// within the class; throws if the braid does not preserve colors.
std::vector<Permutation> color_projection_psi(const ColoredBraid& c);

/// The sign prod_j sgn(w_j)^{s_j}, where s_j is the part size of color j.
int chi_sign(const Partition& p, const std::vector<Permutation>& psi);

/// The pure generator moving the first point of color j once around the last
/// point of color i (1-based color indices, i < j).
ColoredBraid varsigma_generator(const Partition& p, int i, int j);

/// kappa_a as a colored braid; valid only when strands a, a+1 share a color.
ColoredBraid same_color_kappa(const Partition& p, int a);

/// The standard generating set of the colored braid group: all same-color
/// kappa_a plus all varsigma_{i,j}, with stable names ("kappa_a",
/// "varsigma_i_j").
std::vector<std::pair<std::string, ColoredBraid>> bnbar_generators(const Partition& p);

}  // namespace morse
