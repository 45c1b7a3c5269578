#include "morse/slice.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace morse {

namespace {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

bool is_standard_realized(const ConormalPair& pair) {
  if (pair.case_tag != CaseTag::I || pair.u.empty()) return false;
  ConormalPair ref = realize_conormal(CaseTag::I, pair.partition, pair.u, pair.poly);
  return ref.A == pair.A;
}

// Kernel of Y -> J_r^T Y - Y J_c^T on Hom(C^{cols}, C^{rows}); the
// intertwiners between the transposed regular blocks.
std::vector<RatMat> intertwiner_basis(int rows, int cols) {
  RatMat system(rows * cols, rows * cols);
  RatMat jr(rows, rows), jc(cols, cols);
  for (int i = 0; i + 1 < rows; ++i) jr(i, i + 1) = 1;
  for (int i = 0; i + 1 < cols; ++i) jc(i, i + 1) = 1;
  RatMat jrt = jr.transpose(), jct = jc.transpose();
  // Row (i,j) of the system: entry of (Jr^T Y - Y Jc^T)_{ij} as a linear form.
  auto idx = [cols](int i, int j) { return i * cols + j; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      for (int t = 0; t < rows; ++t)
        if (!is_zero(jrt(i, t))) system(idx(i, j), idx(t, j)) += jrt(i, t);
      for (int t = 0; t < cols; ++t)
        if (!is_zero(jct(t, j))) system(idx(i, j), idx(i, t)) -= jct(t, j);
    }
  std::vector<RatMat> basis;
  for (const auto& v : system.kernel_basis()) {
    RatMat y(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) y(i, j) = v[idx(i, j)];
    basis.push_back(std::move(y));
  }
  return basis;
}

// Elementary symmetric functions with first and (optionally) second
// directional derivatives, via power sums and Newton's identities.
struct SymDerivatives {
  std::vector<Cplx> e, dY, dZ, d2;  // index 0 unused, 1..n
};

SymDerivatives elementary_with_derivatives(const CMat& C, const CMat* Y, const CMat* Z,
                                           int upto) {
  int n = static_cast<int>(C.rows());
  std::vector<CMat> pw(upto);  // C^0 .. C^{upto-1}
  pw[0] = CMat::Identity(n, n);
  for (int j = 1; j < upto; ++j) pw[j] = pw[j - 1] * C;

  std::vector<Cplx> p(upto + 1, 0.0), pY(upto + 1, 0.0), pZ(upto + 1, 0.0),
      p2(upto + 1, 0.0);
  for (int j = 1; j <= upto; ++j) {
    p[j] = (pw[j - 1] * C).trace();
    if (Y) pY[j] = static_cast<double>(j) * (pw[j - 1] * (*Y)).trace();
    if (Z) pZ[j] = static_cast<double>(j) * (pw[j - 1] * (*Z)).trace();
    if (Y && Z) {
      Cplx acc = 0.0;
      for (int a = 0; a + 2 <= j; ++a) acc += (pw[a] * (*Y) * pw[j - 2 - a] * (*Z)).trace();
      p2[j] = static_cast<double>(j) * acc;
    }
  }

  SymDerivatives s;
  s.e.assign(upto + 1, 0.0);
  s.dY.assign(upto + 1, 0.0);
  s.dZ.assign(upto + 1, 0.0);
  s.d2.assign(upto + 1, 0.0);
  s.e[0] = 1.0;
  for (int m = 1; m <= upto; ++m) {
    Cplx e = 0.0, dy = 0.0, dz = 0.0, d2 = 0.0;
    for (int i = 1; i <= m; ++i) {
      double sg = (i % 2 == 1) ? 1.0 : -1.0;
      e += sg * s.e[m - i] * p[i];
      dy += sg * (s.dY[m - i] * p[i] + s.e[m - i] * pY[i]);
      dz += sg * (s.dZ[m - i] * p[i] + s.e[m - i] * pZ[i]);
      d2 += sg * (s.d2[m - i] * p[i] + s.dY[m - i] * pZ[i] + s.dZ[m - i] * pY[i] +
                  s.e[m - i] * p2[i]);
    }
    double inv = 1.0 / m;
    s.e[m] = e * inv;
    s.dY[m] = dy * inv;
    s.dZ[m] = dz * inv;
    s.d2[m] = d2 * inv;
  }
  return s;
}

std::vector<Cplx> elem_sym_of_values(const std::vector<Cplx>& vals) {
  std::vector<Cplx> e(vals.size() + 1, 0.0);
  e[0] = 1.0;
  size_t used = 0;
  for (Cplx v : vals) {
    ++used;
    for (size_t m = used; m >= 1; --m) e[m] = e[m] + v * e[m - 1];
  }
  return e;  // e[m] = elementary symmetric of degree m
}

// Newton solve inside one block: C(c) = J + sum c_t (J^T)^t with prescribed
// elementary symmetric functions.
std::pair<CMat, double> newton_block(int d, const std::vector<Cplx>& target_e,
                                     const SliceOptions& opt) {
  CMat J = CMat::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) J(i, i + 1) = 1.0;
  std::vector<CMat> dirs(d);
  dirs[0] = CMat::Identity(d, d);
  for (int t = 1; t < d; ++t) dirs[t] = dirs[t - 1] * J.transpose();

  double target_scale = 1.0;
  for (const auto& v : target_e) target_scale = std::max(target_scale, std::abs(v));

  CVec c = CVec::Zero(d);
  c(0) = target_e[1] / static_cast<double>(d);  // mean of the block spectrum

  auto assemble = [&](const CVec& coeff) {
    CMat m = J;
    for (int t = 0; t < d; ++t) m += coeff(t) * dirs[t];
    return m;
  };
  auto residual = [&](const CVec& coeff) {
    SymDerivatives s = elementary_with_derivatives(assemble(coeff), nullptr, nullptr, d);
    CVec f(d);
    for (int m = 1; m <= d; ++m) f(m - 1) = s.e[m] - target_e[m];
    return f;
  };

  CVec f = residual(c);
  for (int iter = 0; iter < opt.max_newton_iters; ++iter) {
    if (f.lpNorm<Eigen::Infinity>() <= opt.newton_tol * target_scale)
      return {assemble(c), f.lpNorm<Eigen::Infinity>()};
    CMat C = assemble(c);
    Eigen::MatrixXcd jac(d, d);
    for (int t = 0; t < d; ++t) {
      SymDerivatives s = elementary_with_derivatives(C, &dirs[t], nullptr, d);
      for (int m = 1; m <= d; ++m) jac(m - 1, t) = s.dY[m];
    }
    CVec step = jac.fullPivLu().solve(-f);
    double alpha = 1.0;
    while (alpha > 1e-8) {
      CVec trial = c + alpha * step;
      CVec ft = residual(trial);
      if (ft.norm() < f.norm() * (1.0 - 1e-4 * alpha) ||
          ft.lpNorm<Eigen::Infinity>() <= opt.newton_tol * target_scale) {
        c = trial;
        f = ft;
        break;
      }
      alpha *= 0.5;
    }
    if (alpha <= 1e-8)
      throw std::runtime_error("Newton line search stalled (tau too large or degenerate data)");
  }
  throw std::runtime_error("Newton did not converge within the iteration limit");
}

}  // namespace

SliceData build_slice(const ConormalPair& pair) {
  if (!is_standard_realized(pair))
    throw std::invalid_argument("build_slice needs a case-I pair from realize_conormal");
  const Partition& p = pair.partition;
  int n = p.n(), k = p.k();

  SliceData slice;
  slice.partition = p;
  slice.n = n;
  slice.block_dims.assign(k, std::vector<int>(k, 0));

  auto embed = [&](const RatMat& y, int row, int col) {
    RatMat g(n, n);
    for (int i = 0; i < y.rows(); ++i)
      for (int j = 0; j < y.cols(); ++j) g(row + i, col + j) = y(i, j);
    return g;
  };

  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      if (r == c) continue;
      auto basis = intertwiner_basis(p.part(r), p.part(c));
      slice.block_dims[r][c] = static_cast<int>(basis.size());
      for (const auto& y : basis)
        slice.nbar.push_back(embed(y, p.block_offset(r), p.block_offset(c)));
    }

  // Diagonal blocks: powers (J^T)^t, t >= 1, are traceless; the identity
  // components contribute the k-1 traceless differences.
  for (int i = 0; i < k; ++i) {
    int d = p.part(i);
    RatMat jt(d, d);
    for (int a = 0; a + 1 < d; ++a) jt(a + 1, a) = 1;
    RatMat pw = RatMat::identity(d);
    slice.block_dims[i][i] = d;
    for (int t = 1; t < d; ++t) {
      pw = pw * jt;
      RatMat g = embed(pw, p.block_offset(i), p.block_offset(i));
      slice.nbar.push_back(g);
      slice.nbar_bd.push_back(g);
    }
  }
  for (int i = 0; i + 1 < k; ++i) {
    RatMat g(n, n);
    for (int t = 0; t < p.part(i); ++t)
      g(p.block_offset(i) + t, p.block_offset(i) + t) = p.part(i + 1);
    for (int t = 0; t < p.part(i + 1); ++t)
      g(p.block_offset(i + 1) + t, p.block_offset(i + 1) + t) = -p.part(i);
    slice.nbar.push_back(g);
    slice.nbar_bd.push_back(g);
  }

  // dim T = dim sl_n - dim ker(ad_A on sl_n); check the complement dimensions.
  RatMat ad(n * n, n * n);
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < n; ++t) {
        if (!is_zero(pair.A(t, j))) ad(idx(i, j), idx(i, t)) += pair.A(t, j);
        if (!is_zero(pair.A(i, t))) ad(idx(i, j), idx(t, j)) -= pair.A(i, t);
      }
  slice.dim_tangent = ad.rank();
  if (slice.dim_tangent + static_cast<int>(slice.nbar.size()) != n * n - 1)
    throw std::logic_error("slice dimension check failed");
  return slice;
}

std::vector<CriticalPoint> slice_critical_points_I(
    const ConormalPair& pair, const std::vector<Cplx>& lambdas, const SliceOptions& opt) {
  const Partition& p = pair.partition;
  int n = p.n(), k = p.k();
  if (static_cast<int>(lambdas.size()) != n)
    throw std::invalid_argument("need n lambda values");
  double scale_l = 1.0;
  Cplx sum = 0.0;
  for (const auto& l : lambdas) {
    sum += l;
    scale_l = std::max(scale_l, std::abs(l));
  }
  if (std::abs(sum) > 1e-12 * scale_l)
    throw std::invalid_argument("lambdas must sum to zero");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(lambdas[i] - lambdas[j]) < 1e-12 * scale_l)
        throw std::invalid_argument("lambdas must be pairwise distinct");

  SliceData slice = build_slice(pair);
  CMat B = ratmat_to_complex(pair.B);
  std::vector<BetaMap> betas = enumerate_beta(p);

  // Frobenius-orthonormal frame for the slice directions.
  int D = static_cast<int>(slice.nbar.size());
  CMat frame_vecs(n * n, D);
  for (int a = 0; a < D; ++a) {
    CMat y = ratmat_to_complex(slice.nbar[a]);
    frame_vecs.col(a) = Eigen::Map<CVec>(y.data(), n * n);
  }
  Eigen::HouseholderQR<CMat> qr(frame_vecs);
  CMat qfull = qr.householderQ() * CMat::Identity(n * n, D);
  std::vector<CMat> frame(D);
  for (int a = 0; a < D; ++a)
    frame[a] = Eigen::Map<CMat>(qfull.col(a).data(), n, n);

  std::vector<CriticalPoint> points;
  for (const BetaMap& beta : betas) {
    CMat C = CMat::Zero(n, n);
    double newton_res = 0.0;
    for (int i = 0; i < k; ++i) {
      std::vector<Cplx> vals;
      for (int j = 0; j < n; ++j)
        if (beta.assign[j] == i) vals.push_back(opt.tau * lambdas[j]);
      auto [block, res] = newton_block(p.part(i), elem_sym_of_values(vals), opt);
      newton_res = std::max(newton_res, res);
      C.block(p.block_offset(i), p.block_offset(i), p.part(i), p.part(i)) = block;
    }

    CriticalPoint pt;
    pt.beta = beta;
    pt.C = C;
    pt.newton_residual = newton_res;
    pt.xi = (B * C).trace();

    // Constraints on the fiber through C inside the full slice: e_2..e_n.
    int nc = n - 1;
    if (nc == 0 || D == 0) {
      pt.hessian_dim = D;
      pt.hessian_sigma_min = std::numeric_limits<double>::infinity();
      points.push_back(std::move(pt));
      continue;
    }
    CMat jac(nc, D);
    CVec grad_xi(D);
    for (int a = 0; a < D; ++a) {
      SymDerivatives s = elementary_with_derivatives(C, &frame[a], nullptr, n);
      for (int m = 2; m <= n; ++m) jac(m - 2, a) = s.dY[m];
      grad_xi(a) = (B * frame[a]).trace();
    }
    Eigen::JacobiSVD<CMat> jsvd(jac, Eigen::ComputeFullV);
    const auto& sv = jsvd.singularValues();
    double cutoff = 1e-8 * std::max(sv(0), 1e-300);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
    if (rank != nc)
      throw std::runtime_error("fiber is singular at a critical point (degenerate data)");
    int tdim = D - nc;
    pt.hessian_dim = tdim;

    // Lagrange multipliers: jac^T y = grad_xi (complex-bilinear, so the plain
    // transpose); the residual measures criticality of xi on the fiber.
    CMat jt = jac.transpose();
    CVec y = jt.colPivHouseholderQr().solve(grad_xi);
    pt.criticality_residual =
        (jt * y - grad_xi).norm() / std::max(grad_xi.norm(), 1e-300);

    if (tdim == 0) {
      pt.hessian_sigma_min = std::numeric_limits<double>::infinity();
      points.push_back(std::move(pt));
      continue;
    }

    // Orthonormal tangent frame from the kernel of the constraint Jacobian.
    std::vector<CMat> tangent(tdim);
    for (int b = 0; b < tdim; ++b) {
      CMat z = CMat::Zero(n, n);
      for (int a = 0; a < D; ++a) z += jsvd.matrixV()(a, nc + b) * frame[a];
      tangent[b] = z;
    }

    // xi is linear, so the constrained Hessian is -sum_mu y_mu Hess g_mu
    // restricted to the tangent space.
    CMat hess(tdim, tdim);
    for (int b = 0; b < tdim; ++b)
      for (int c2 = b; c2 < tdim; ++c2) {
        SymDerivatives s = elementary_with_derivatives(C, &tangent[b], &tangent[c2], n);
        Cplx acc = 0.0;
        for (int m = 2; m <= n; ++m) acc += y(m - 2) * s.d2[m];
        hess(b, c2) = -acc;
        hess(c2, b) = -acc;
      }
    Eigen::JacobiSVD<CMat> hsvd(hess);
    pt.hessian_sigma_max = hsvd.singularValues()(0);
    pt.hessian_sigma_min = hsvd.singularValues()(tdim - 1);
    points.push_back(std::move(pt));
  }

  // Lemma-level sanity: the points are pairwise distinct.
  for (size_t a = 0; a < points.size(); ++a)
    for (size_t b = a + 1; b < points.size(); ++b)
      if ((points[a].C - points[b].C).norm() <=
          opt.separation_factor * std::abs(opt.tau))
        throw std::runtime_error("duplicate critical points (unexpected degeneracy)");
  return points;
}

}  // namespace morse
