#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "morse/module_rep.hpp"
#include "morse/partition.hpp"
#include "morse/ratmat.hpp"

namespace morse {

// Point (A, B) of the conormal variety to the orbit stratification, in one of
// the three matrix models:
//   I   : trace-zero endomorphisms of C^n,
//   II  : self-adjoint trace-zero endomorphisms w.r.t. a symmetric form nu,
//   III : endomorphisms of a symplectic C^{2n} with omega(Au,v) = omega(u,Av).
// The partition is the (halved, in case III) Jordan datum of A.
struct ConormalPair {
  CaseTag case_tag = CaseTag::I;
  Partition partition;
  RatMat A, B;
  RatMat form;  // nu (case II) or omega (case III); empty for case I

  // Construction data when produced by realize_conormal (block-diagonal
  // standard form); empty otherwise.
  std::vector<Rat> u;
  std::vector<std::vector<Rat>> poly;

  int matrix_size() const { return A.rows(); }
};

/// Block-diagonal standard pair: A is one regular nilpotent block per part
/// (doubled and paired in case III), B restricted to block i is
/// u_i + poly_i(A).  Requires pairwise distinct u_i and sum n_i u_i = 0.
/// poly may be empty (B semisimple) or give coefficients for A^1..A^{n_i-1}.
ConormalPair realize_conormal(CaseTag tag, const Partition& p, const std::vector<Rat>& u,
                              const std::vector<std::vector<Rat>>& poly = {});

/// realize_conormal with random data, conjugated by a random exact element of
/// the form-preserving group (Cayley transform), so the pair is dense but
/// still exactly conormal.
ConormalPair sample_conormal(CaseTag tag, const Partition& p, std::mt19937_64& rng);

/// A nilpotent, both matrices in the declared space, and AB = BA (exact).
bool is_conormal(const ConormalPair& pair);

/// Jordan partition of an exactly nilpotent matrix from the ranks of its
/// powers; case III halves the (necessarily even) multiplicities.
/// Throws if the matrix is not nilpotent or the parity fails.
Partition jordan_partition(CaseTag tag, const RatMat& A);

/// (e_2, ..., e_n) of the eigenvalue multiset (halved multiset in case III;
/// throws if the characteristic polynomial is not a perfect square).
std::vector<Rat> quotient_map_f(CaseTag tag, const RatMat& M);
std::vector<std::complex<double>> quotient_map_f(CaseTag tag, const Eigen::MatrixXcd& M,
                                                 double tol);

struct ResidualCheck {
  std::string name;
  double residual = 0.0;  // relative
  bool pass = false;
};

struct NormalFormReport {
  bool ok = false;
  std::vector<ResidualCheck> checks;
  std::vector<int> poly_degree;  // achieved degree of P_i per eigenspace
  double max_residual() const;
  void add(const std::string& name, double residual, double tol);
};

/// Numerical verification of the normal form of a generic conormal pair:
/// generalized eigenspace dimensions, A-invariance and per-block regularity,
/// orthogonality of the eigenspaces under the form, and the polynomials P_i
/// with B|_{U_i} = P_i(A|_{U_i}).  Throws if B does not have k distinct
/// eigenvalue clusters.
NormalFormReport verify_normal_form(const ConormalPair& pair, double tol = 1e-9);

Eigen::MatrixXcd ratmat_to_complex(const RatMat& m);

}  // namespace morse
