#include "morse/colored_braid.hpp"

#include <stdexcept>

namespace morse {

ColoredBraid::ColoredBraid(Partition p, BraidWord w)
    : partition(std::move(p)), word(std::move(w)) {
  if (word.strands != partition.k())
    throw std::invalid_argument("colored braid must have k strands");
}

bool preserves_colors(const ColoredBraid& c) {
  Permutation pi = strand_permutation(c.word);
  for (int i = 0; i < pi.size(); ++i)
    if (c.color(pi(i)) != c.color(i)) return false;
  return true;
}

std::vector<Permutation> color_projection_psi(const ColoredBraid& c) {
  if (!preserves_colors(c))
    throw std::invalid_argument("braid word does not preserve colors (not in B_nbar)");
  Permutation pi = strand_permutation(c.word);
  const Partition& p = c.partition;
  std::vector<Permutation> out;
  for (int j = 0; j < p.num_colors(); ++j) {
    int begin = p.color_begin(j), m = p.multiplicities()[j];
    std::vector<int> img(m);
    for (int t = 0; t < m; ++t) img[t] = pi(begin + t) - begin;
    out.push_back(Permutation(img));
  }
  return out;
}

int chi_sign(const Partition& p, const std::vector<Permutation>& psi) {
  if (static_cast<int>(psi.size()) != p.num_colors())
    throw std::invalid_argument("psi tuple has wrong length");
  int sign = 1;
  for (int j = 0; j < p.num_colors(); ++j)
    if (p.distinct_sizes()[j] % 2 != 0 && psi[j].sign() < 0) sign = -sign;
  return sign;
}

ColoredBraid varsigma_generator(const Partition& p, int i, int j) {
  int l = p.num_colors();
  if (i < 1 || j <= i || j > l)
    throw std::out_of_range("varsigma color indices out of range");
  // Partial sums of the multiplicities give the strand positions.
  auto M = [&](int t) { return p.color_begin(t - 1) + p.multiplicities()[t - 1]; };
  std::vector<int> letters;
  for (int a = M(j - 1); a > M(i); --a) letters.push_back(-a);
  letters.push_back(M(i));
  letters.push_back(M(i));
  for (int a = M(i) + 1; a <= M(j - 1); ++a) letters.push_back(a);
  return ColoredBraid(p, BraidWord(p.k(), std::move(letters)));
}

ColoredBraid same_color_kappa(const Partition& p, int a) {
  if (a < 1 || a >= p.k()) throw std::out_of_range("kappa index out of range");
  if (p.part(a - 1) != p.part(a))
    throw std::invalid_argument("kappa_" + std::to_string(a) +
                                " mixes colors for partition " + p.to_string());
  return ColoredBraid(p, BraidWord(p.k(), {a}));
}

std::vector<std::pair<std::string, ColoredBraid>> bnbar_generators(const Partition& p) {
  std::vector<std::pair<std::string, ColoredBraid>> gens;
  for (int a = 1; a < p.k(); ++a)
    if (p.part(a - 1) == p.part(a))
      gens.emplace_back("kappa_" + std::to_string(a), same_color_kappa(p, a));
  for (int i = 1; i <= p.num_colors(); ++i)
    for (int j = i + 1; j <= p.num_colors(); ++j)
      gens.emplace_back("varsigma_" + std::to_string(i) + "_" + std::to_string(j),
                        varsigma_generator(p, i, j));
  return gens;
}

}  // namespace morse
