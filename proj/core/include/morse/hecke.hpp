#pragma once

#include <map>
#include <vector>

#include "morse/braid.hpp"
#include "morse/partition.hpp"
#include "morse/permutation.hpp"
#include "morse/ratmat.hpp"
#include "morse/rational.hpp"

namespace morse {

// Element of the Hecke algebra of S_n at q = -1, presented as
// C[B_n] / (sigma_1 - 1)^2, in the T-basis {T_w}.  The defining relations are
// T_s^2 = 2 T_s - 1 for simple reflections together with the braid relations.
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {}
  static HeckeElement unit(int n);                       // T_e
  static HeckeElement basis(const Permutation& w);       // T_w

  int letters() const { return n_; }
  const std::map<Permutation, Rat>& coeffs() const { return coeffs_; }
  Rat coeff(const Permutation& w) const;
  void set_coeff(const Permutation& w, const Rat& c);
  void add_term(const Permutation& w, const Rat& c);
  size_t support_size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scaled(const Rat& c) const;
  bool operator==(const HeckeElement& o) const;

 private:
  int n_;
  std::map<Permutation, Rat> coeffs_;  // zero coefficients never stored
};

/// T_{s_{a+1}} * x for the adjacent transposition at 0-based position a:
/// T_s T_w = T_{sw} when the length goes up, else 2 T_w - T_{sw}.
HeckeElement hecke_gen_mult_left(int a, const HeckeElement& x);
/// x * T_{s_{a+1}}.
HeckeElement hecke_gen_mult_right(const HeckeElement& x, int a);

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);

/// Multiplicative image of a braid word: sigma_i -> T_{s_i},
/// sigma_i^{-1} -> 2 T_e - T_{s_i}.
HeckeElement braid_to_hecke(const BraidWord& w);

/// Image of x in the induced module H (x)_{H_P} 1 on the basis
/// {T_w : w in min_coset_reps(p)}, in enumerate_beta order.
std::vector<Rat> reduce_mod_parabolic(const HeckeElement& x, const Partition& p);

/// Row space spanned by {T_v (T_t - T_e) : v in S_n, t a Young-subgroup simple
/// generator}, as vectors over all_permutations(n); this is the kernel of the
/// projection onto the induced module.
RowSpace parabolic_kernel_span(const Partition& p);

/// Dense coordinates of x over all_permutations(n).
std::vector<Rat> hecke_to_vector(const HeckeElement& x,
                                 const std::vector<Permutation>& basis);

}  // namespace morse
