#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "morse/betamap.hpp"
#include "morse/conormal.hpp"

namespace morse {

// Normal-slice data at a realized case-I point A: the slice directions are
// the centralizer of A^T (the Frobenius-orthogonal complement of the orbit
// tangent space [sl_n, A]), split along the blocks Hom(U_i, U_j).
struct SliceData {
  Partition partition;
  int n = 0;
  int dim_tangent = 0;                 // dim [sl_n, A]
  std::vector<RatMat> nbar;            // basis of the full slice directions
  std::vector<RatMat> nbar_bd;         // basis of the block-diagonal part
  std::vector<std::vector<int>> block_dims;  // dim of Nbar_{i,j}
};

/// Requires a pair produced by realize_conormal with case tag I (explicit
/// block structure).  Checks dim Nbar + dim T = dim sl_n exactly.
SliceData build_slice(const ConormalPair& pair);

struct CriticalPoint {
  BetaMap beta;
  Eigen::MatrixXcd C;
  double newton_residual = 0.0;
  std::complex<double> xi;        // tr(B C)
  int hessian_dim = 0;            // tangent dimension of the fiber
  double hessian_sigma_min = 0.0; // +inf when the tangent space is zero
  double hessian_sigma_max = 0.0;
  double criticality_residual = 0.0;
};

struct SliceOptions {
  std::complex<double> tau{0.1, 0.0};
  double newton_tol = 1e-13;
  int max_newton_iters = 100;
  double separation_factor = 1e-6;  // required pairwise gap, times |tau|
};

/// Enumerates the critical points of xi = tr(B .) on the fiber of the
/// quotient map through the slice: one point per BetaMap, found blockwise by
/// damped Newton iteration on characteristic-polynomial coefficients, each
/// with its fiber Hessian data.  lambdas must be distinct and sum to zero.
std::vector<CriticalPoint> slice_critical_points_I(
    const ConormalPair& pair, const std::vector<std::complex<double>>& lambdas,
    const SliceOptions& opt = {});

}  // namespace morse
