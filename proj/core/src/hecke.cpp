#include "morse/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "morse/betamap.hpp"

namespace morse {

namespace {
// One-line vector with the values a, a+1 swapped: s_{a+1} o w.
Permutation left_swap(const Permutation& w, int a) {
  std::vector<int> img = w.one_line();
  for (int& v : img) {
    if (v == a)
      v = a + 1;
    else if (v == a + 1)
      v = a;
  }
  return Permutation(img);
}

// w o s_{a+1}: positions a, a+1 swapped.
Permutation right_swap(const Permutation& w, int a) {
  std::vector<int> img = w.one_line();
  std::swap(img[a], img[a + 1]);
  return Permutation(img);
}

// Minimal-length representative of the left coset w (S_{n_1} x ... x S_{n_k}):
// sort the one-line values within each letter block.
Permutation coset_floor(const Permutation& w, const Partition& p) {
  std::vector<int> img = w.one_line();
  for (int i = 0; i < p.k(); ++i) {
    auto b = img.begin() + p.block_offset(i);
    std::sort(b, b + p.part(i));
  }
  return Permutation(img);
}
}  // namespace

HeckeElement HeckeElement::unit(int n) {
  HeckeElement x(n);
  x.coeffs_[Permutation(n)] = 1;
  return x;
}

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement x(w.size());
  x.coeffs_[w] = 1;
  return x;
}

Rat HeckeElement::coeff(const Permutation& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void HeckeElement::set_coeff(const Permutation& w, const Rat& c) {
  if (morse::is_zero(c))
    coeffs_.erase(w);
  else
    coeffs_[w] = c;
}

void HeckeElement::add_term(const Permutation& w, const Rat& c) {
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    if (!morse::is_zero(c)) coeffs_[w] = c;
    return;
  }
  it->second += c;
  if (morse::is_zero(it->second)) coeffs_.erase(it);
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Hecke letter-count mismatch");
  HeckeElement out = *this;
  for (const auto& [w, c] : o.coeffs_) out.add_term(w, c);
  return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Hecke letter-count mismatch");
  HeckeElement out = *this;
  for (const auto& [w, c] : o.coeffs_) out.add_term(w, -c);
  return out;
}

HeckeElement HeckeElement::scaled(const Rat& c) const {
  HeckeElement out(n_);
  if (morse::is_zero(c)) return out;
  for (const auto& [w, x] : coeffs_) out.coeffs_[w] = x * c;
  return out;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  return n_ == o.n_ && coeffs_ == o.coeffs_;
}

HeckeElement hecke_gen_mult_left(int a, const HeckeElement& x) {
  HeckeElement out(x.letters());
  for (const auto& [w, c] : x.coeffs()) {
    Permutation sw = left_swap(w, a);
    // l(s w) > l(w) iff the value a sits left of the value a+1 in w.
    Permutation winv = w.inverse();
    if (winv(a) < winv(a + 1)) {
      out.add_term(sw, c);
    } else {
      out.add_term(w, 2 * c);
      out.add_term(sw, -c);
    }
  }
  return out;
}

HeckeElement hecke_gen_mult_right(const HeckeElement& x, int a) {
  HeckeElement out(x.letters());
  for (const auto& [w, c] : x.coeffs()) {
    Permutation ws = right_swap(w, a);
    if (w(a) < w(a + 1)) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, 2 * c);
      out.add_term(ws, -c);
    }
  }
  return out;
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
  if (a.letters() != b.letters()) throw std::invalid_argument("Hecke letter-count mismatch");
  HeckeElement out(a.letters());
  for (const auto& [v, c] : a.coeffs()) {
    // T_v b via a reduced word of v, rightmost factor applied first.
    std::vector<int> word = reduced_word(v);
    HeckeElement acc = b.scaled(c);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      acc = hecke_gen_mult_left(*it, acc);
    out = out + acc;
  }
  return out;
}

HeckeElement braid_to_hecke(const BraidWord& w) {
  HeckeElement acc = HeckeElement::unit(w.strands);
  for (int l : w.letters) {
    int a = (l > 0 ? l : -l) - 1;
    HeckeElement right = hecke_gen_mult_right(acc, a);
    if (l > 0)
      acc = right;
    else
      acc = acc.scaled(2) - right;  // T_s^{-1} = 2 T_e - T_s
  }
  return acc;
}

std::vector<Rat> reduce_mod_parabolic(const HeckeElement& x, const Partition& p) {
  if (x.letters() != p.n())
    throw std::invalid_argument("partition does not match Hecke letter count");
  std::vector<BetaMap> betas = enumerate_beta(p);
  std::vector<Rat> out(betas.size(), Rat(0));
  for (const auto& [v, c] : x.coeffs()) {
    Permutation w = coset_floor(v, p);
    // Identify the coset through its BetaMap w . beta_0.
    BetaMap b = sigma_action_on_beta(w, beta_zero(p));
    out[beta_index(betas, b)] += c;
  }
  return out;
}

RowSpace parabolic_kernel_span(const Partition& p) {
  std::vector<Permutation> basis = all_permutations(p.n());
  RowSpace space(static_cast<int>(basis.size()));
  for (const Permutation& v : basis) {
    HeckeElement tv = HeckeElement::basis(v);
    for (int t : p.young_generators()) {
      HeckeElement x = hecke_gen_mult_right(tv, t) - tv;
      space.add(hecke_to_vector(x, basis));
    }
  }
  return space;
}

std::vector<Rat> hecke_to_vector(const HeckeElement& x,
                                 const std::vector<Permutation>& basis) {
  std::vector<Rat> v(basis.size(), Rat(0));
  for (const auto& [w, c] : x.coeffs()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it == basis.end() || !(*it == w)) throw std::logic_error("permutation outside basis");
    v[it - basis.begin()] = c;
  }
  return v;
}

}  // namespace morse
