#include "morse/betamap.hpp"

#include <algorithm>
#include <stdexcept>

namespace morse {

std::string BetaMap::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < assign.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(assign[i] + 1);
  }
  return s + ")";
}

bool is_valid_beta(const Partition& p, const BetaMap& b) {
  if (static_cast<int>(b.assign.size()) != p.n()) return false;
  std::vector<int> fiber(p.k(), 0);
  for (int v : b.assign) {
    if (v < 0 || v >= p.k()) return false;
    ++fiber[v];
  }
  for (int i = 0; i < p.k(); ++i)
    if (fiber[i] != p.part(i)) return false;
  return true;
}

BetaMap beta_zero(const Partition& p) {
  BetaMap b;
  b.assign.reserve(p.n());
  for (int i = 0; i < p.k(); ++i)
    for (int t = 0; t < p.part(i); ++t) b.assign.push_back(i);
  return b;
}

std::vector<BetaMap> enumerate_beta(const Partition& p) {
  BetaMap b = beta_zero(p);
  std::vector<BetaMap> out;
  do {
    out.push_back(b);
  } while (std::next_permutation(b.assign.begin(), b.assign.end()));
  return out;
}

int beta_index(const std::vector<BetaMap>& list, const BetaMap& b) {
  auto it = std::lower_bound(list.begin(), list.end(), b);
  if (it == list.end() || !(*it == b)) throw std::invalid_argument("BetaMap not in basis");
  return static_cast<int>(it - list.begin());
}

BetaMap sigma_action_on_beta(const Permutation& w, const BetaMap& b) {
  if (w.size() != static_cast<int>(b.assign.size()))
    throw std::invalid_argument("permutation/beta size mismatch");
  Permutation winv = w.inverse();
  BetaMap out;
  out.assign.resize(b.assign.size());
  for (int x = 0; x < w.size(); ++x) out.assign[x] = b.assign[winv(x)];
  return out;
}

BetaMap relabel_blocks(const Permutation& g, const BetaMap& b) {
  BetaMap out;
  out.assign.resize(b.assign.size());
  for (size_t x = 0; x < b.assign.size(); ++x) out.assign[x] = g(b.assign[x]);
  return out;
}

Permutation coset_rep_for_beta(const Partition& p, const BetaMap& b) {
  if (!is_valid_beta(p, b)) throw std::invalid_argument("invalid BetaMap");
  // Send the letters of block i, in order, to the sorted fiber beta^{-1}(i).
  std::vector<std::vector<int>> fibers(p.k());
  for (int x = 0; x < p.n(); ++x) fibers[b.assign[x]].push_back(x);
  std::vector<int> img(p.n());
  for (int i = 0; i < p.k(); ++i)
    for (int t = 0; t < p.part(i); ++t) img[p.block_offset(i) + t] = fibers[i][t];
  return Permutation(img);
}

std::vector<Permutation> min_coset_reps(const Partition& p) {
  std::vector<Permutation> reps;
  for (const BetaMap& b : enumerate_beta(p)) reps.push_back(coset_rep_for_beta(p, b));
  return reps;
}

}  // namespace morse
