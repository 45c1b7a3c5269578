#include "morse/conormal.hpp"

#include <algorithm>
#include <stdexcept>

namespace morse {

namespace {

// Regular nilpotent upper-shift block of size d.
RatMat jordan_block(int d) {
  RatMat j(d, d);
  for (int i = 0; i + 1 < d; ++i) j(i, i + 1) = 1;
  return j;
}

// Antidiagonal involution of size d; F J F = J^T for the upper shift J.
RatMat antidiag(int d) {
  RatMat f(d, d);
  for (int i = 0; i < d; ++i) f(i, d - 1 - i) = 1;
  return f;
}

void put_block(RatMat& dst, const RatMat& src, int row, int col) {
  for (int i = 0; i < src.rows(); ++i)
    for (int j = 0; j < src.cols(); ++j) dst(row + i, col + j) = src(i, j);
}

RatMat poly_in(const RatMat& m, const Rat& constant, const std::vector<Rat>& coeffs) {
  RatMat acc = RatMat::identity(m.rows()).scaled(constant);
  RatMat p = RatMat::identity(m.rows());
  for (const Rat& c : coeffs) {
    p = p * m;
    acc = acc + p.scaled(c);
  }
  return acc;
}

bool self_adjoint_wrt(const RatMat& form, const RatMat& m) {
  return form * m == m.transpose() * form;
}

Rat rand_rat(std::mt19937_64& rng, int num_range, int max_den) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat(num(rng), den(rng));
}

}  // namespace

ConormalPair realize_conormal(CaseTag tag, const Partition& p, const std::vector<Rat>& u,
                              const std::vector<std::vector<Rat>>& poly) {
  if (static_cast<int>(u.size()) != p.k())
    throw std::invalid_argument("need one eigenvalue per part");
  for (int i = 0; i < p.k(); ++i)
    for (int j = i + 1; j < p.k(); ++j)
      if (u[i] == u[j]) throw std::invalid_argument("eigenvalues u_i must be distinct");
  Rat tr(0);
  for (int i = 0; i < p.k(); ++i) tr += Rat(p.part(i)) * u[i];
  if (!is_zero(tr)) throw std::invalid_argument("trace condition sum n_i u_i = 0 violated");
  if (!poly.empty() && static_cast<int>(poly.size()) != p.k())
    throw std::invalid_argument("need one coefficient list per part");
  for (int i = 0; i < static_cast<int>(poly.size()); ++i)
    if (static_cast<int>(poly[i].size()) > p.part(i) - 1)
      throw std::invalid_argument("polynomial degree exceeds n_i - 1");

  ConormalPair pair;
  pair.case_tag = tag;
  pair.partition = p;
  pair.u = u;
  pair.poly = poly.empty() ? std::vector<std::vector<Rat>>(p.k()) : poly;

  int n = (tag == CaseTag::III) ? 2 * p.n() : p.n();
  pair.A = RatMat(n, n);
  pair.B = RatMat(n, n);
  if (tag != CaseTag::I) pair.form = RatMat(n, n);

  int off = 0;
  for (int i = 0; i < p.k(); ++i) {
    int d = p.part(i);
    RatMat jb = jordan_block(d);
    RatMat bb = poly_in(jb, u[i], pair.poly[i]);
    if (tag == CaseTag::III) {
      // U_i^+ then U_i^-, each a copy of the regular block; omega couples them
      // through the antidiagonal so that A and B are omega-self-adjoint.
      put_block(pair.A, jb, off, off);
      put_block(pair.A, jb, off + d, off + d);
      put_block(pair.B, bb, off, off);
      put_block(pair.B, bb, off + d, off + d);
      RatMat f = antidiag(d);
      put_block(pair.form, f, off, off + d);
      put_block(pair.form, f.scaled(Rat(-1)), off + d, off);
      off += 2 * d;
    } else {
      put_block(pair.A, jb, off, off);
      put_block(pair.B, bb, off, off);
      if (tag == CaseTag::II) put_block(pair.form, antidiag(d), off, off);
      off += d;
    }
  }
  return pair;
}

ConormalPair sample_conormal(CaseTag tag, const Partition& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-9, 9);
  std::vector<Rat> u(p.k());
  for (int attempt = 0;; ++attempt) {
    if (attempt > 1000) throw std::runtime_error("failed to sample distinct eigenvalues");
    Rat acc(0);
    for (int i = 0; i + 1 < p.k(); ++i) {
      u[i] = small(rng);
      acc += Rat(p.part(i)) * u[i];
    }
    u[p.k() - 1] = -acc / Rat(p.part(p.k() - 1));
    bool ok = true;
    for (int i = 0; ok && i < p.k(); ++i)
      for (int j = i + 1; ok && j < p.k(); ++j)
        if (abs(u[i] - u[j]) < Rat(1, 2)) ok = false;
    if (ok) break;
  }

  std::vector<std::vector<Rat>> poly(p.k());
  for (int i = 0; i < p.k(); ++i)
    for (int t = 1; t < p.part(i); ++t) poly[i].push_back(rand_rat(rng, 3, 2));

  ConormalPair pair = realize_conormal(tag, p, u, poly);
  int n = pair.matrix_size();

  // Conjugate by a Cayley transform of a random Lie-algebra element; this
  // keeps the form fixed and the pair exactly conormal.
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100) throw std::runtime_error("failed to sample a Cayley transform");
    RatMat x(n, n);
    if (tag == CaseTag::I) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = rand_rat(rng, 2, 3);
    } else if (tag == CaseTag::II) {
      RatMat skew(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          skew(i, j) = rand_rat(rng, 2, 3);
          skew(j, i) = -skew(i, j);
        }
      x = pair.form * skew;
    } else {
      RatMat sym(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          sym(i, j) = rand_rat(rng, 2, 3);
          sym(j, i) = sym(i, j);
        }
      x = pair.form.scaled(Rat(-1)) * sym;  // omega^{-1} = -omega
    }
    RatMat id = RatMat::identity(n);
    RatMat i_minus_x = id - x;
    if (i_minus_x.rank() != n) continue;
    RatMat g = i_minus_x.inverse() * (id + x);
    RatMat ginv = g.inverse();
    pair.A = g * pair.A * ginv;
    pair.B = g * pair.B * ginv;
    pair.u.clear();  // block structure no longer explicit
    pair.poly.clear();
    return pair;
  }
}

bool is_conormal(const ConormalPair& pair) {
  const RatMat &A = pair.A, &B = pair.B;
  if (A.rows() != A.cols() || B.rows() != A.rows() || B.cols() != A.cols()) return false;
  if (!is_zero(A.trace()) || !is_zero(B.trace())) return false;
  if (pair.case_tag != CaseTag::I) {
    if (!self_adjoint_wrt(pair.form, A) || !self_adjoint_wrt(pair.form, B)) return false;
  }
  if (!A.pow(A.rows()).is_zero()) return false;
  return matrix_commutator(A, B).is_zero();
}

Partition jordan_partition(CaseTag tag, const RatMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("jordan_partition needs a square matrix");
  int n = A.rows();
  std::vector<int> ranks{n};  // rank of A^0
  RatMat power = A;
  while (true) {
    int r = power.rank();
    ranks.push_back(r);
    if (r == 0) break;
    if (static_cast<int>(ranks.size()) > n)
      throw std::invalid_argument("matrix is not nilpotent");
    power = power * A;
  }
  std::vector<int> blocks_ge;  // blocks of size >= j, j = 1, 2, ...
  for (size_t j = 1; j < ranks.size(); ++j) blocks_ge.push_back(ranks[j - 1] - ranks[j]);
  blocks_ge.push_back(0);
  std::vector<int> parts;
  for (size_t s = 1; s < blocks_ge.size(); ++s) {
    int count = blocks_ge[s - 1] - blocks_ge[s];
    if (tag == CaseTag::III) {
      if (count % 2 != 0)
        throw std::invalid_argument("case III requires even block multiplicities");
      count /= 2;
    }
    for (int c = 0; c < count; ++c) parts.push_back(static_cast<int>(s));
  }
  return Partition(parts);
}

namespace {
std::vector<Rat> char_poly_sqrt(const std::vector<Rat>& c) {
  int two_n = static_cast<int>(c.size()) - 1;
  if (two_n % 2 != 0) throw std::invalid_argument("odd-degree characteristic polynomial");
  int n = two_n / 2;
  std::vector<Rat> q(n + 1, Rat(0));
  q[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rat acc = c[m];
    for (int i = 1; i < m; ++i) acc -= q[i] * q[m - i];
    q[m] = acc / 2;
  }
  for (int m = n + 1; m <= two_n; ++m) {
    Rat acc(0);
    for (int i = m - n; i <= n; ++i) acc += q[i] * q[m - i];
    if (acc != c[m])
      throw std::invalid_argument("spectrum does not have even multiplicities");
  }
  return q;
}
}  // namespace

std::vector<Rat> quotient_map_f(CaseTag tag, const RatMat& M) {
  std::vector<Rat> c = M.char_poly();
  if (tag == CaseTag::III) c = char_poly_sqrt(c);
  int n = static_cast<int>(c.size()) - 1;
  std::vector<Rat> e;
  for (int j = 2; j <= n; ++j) e.push_back((j % 2 == 0) ? c[j] : -c[j]);
  return e;
}

std::vector<std::complex<double>> complex_char_poly(const Eigen::MatrixXcd& M) {
  int n = static_cast<int>(M.rows());
  std::vector<std::complex<double>> c(n + 1);
  c[0] = 1.0;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    Eigen::MatrixXcd step = m;
    for (int i = 0; i < n; ++i) step(i, i) += c[k - 1];
    m = M * step;
    c[k] = -m.trace() / static_cast<double>(k);
  }
  return c;
}

std::vector<std::complex<double>> quotient_map_f(CaseTag tag, const Eigen::MatrixXcd& M,
                                                 double tol) {
  std::vector<std::complex<double>> c = complex_char_poly(M);
  if (tag == CaseTag::III) {
    int two_n = static_cast<int>(c.size()) - 1;
    int n = two_n / 2;
    double scale = 1.0;
    for (const auto& x : c) scale = std::max(scale, std::abs(x));
    std::vector<std::complex<double>> q(n + 1);
    q[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
      std::complex<double> acc = c[m];
      for (int i = 1; i < m; ++i) acc -= q[i] * q[m - i];
      q[m] = acc / 2.0;
    }
    for (int m = n + 1; m <= two_n; ++m) {
      std::complex<double> acc = 0.0;
      for (int i = m - n; i <= n; ++i) acc += q[i] * q[m - i];
      if (std::abs(acc - c[m]) > tol * scale)
        throw std::invalid_argument("spectrum does not have even multiplicities");
    }
    c = std::move(q);
  }
  int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> e;
  for (int j = 2; j <= n; ++j) e.push_back((j % 2 == 0) ? c[j] : -c[j]);
  return e;
}

Eigen::MatrixXcd ratmat_to_complex(const RatMat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = rat_double(m(i, j));
  return out;
}

double NormalFormReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

void NormalFormReport::add(const std::string& name, double residual, double tol) {
  checks.push_back({name, residual, residual <= tol});
}

NormalFormReport verify_normal_form(const ConormalPair& pair, double tol) {
  const Partition& p = pair.partition;
  int n = pair.matrix_size();
  int k = p.k();
  Eigen::MatrixXcd A = ratmat_to_complex(pair.A);
  Eigen::MatrixXcd B = ratmat_to_complex(pair.B);
  double scale_a = std::max(1.0, A.norm()), scale_b = std::max(1.0, B.norm());

  // Cluster the eigenvalues of B.
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(B, false);
  std::vector<std::complex<double>> ev(ces.eigenvalues().data(),
                                       ces.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  double cluster_tol = 1e-4 * scale_b;
  std::vector<std::pair<std::complex<double>, int>> clusters;  // (mean, size)
  for (const auto& v : ev) {
    if (!clusters.empty()) {
      auto& [mean, size] = clusters.back();
      if (std::abs(v - mean) < cluster_tol) {
        mean = (mean * static_cast<double>(size) + v) / static_cast<double>(size + 1);
        ++size;
        continue;
      }
    }
    clusters.emplace_back(v, 1);
  }
  if (static_cast<int>(clusters.size()) != k)
    throw std::domain_error("B does not have k distinct eigenvalues");

  // Match clusters to parts: sizes must agree as multisets (ascending).
  std::vector<int> expected(k);
  for (int i = 0; i < k; ++i)
    expected[i] = (pair.case_tag == CaseTag::III) ? 2 * p.part(i) : p.part(i);
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  NormalFormReport report;
  for (int i = 0; i < k; ++i)
    report.add("eigenspace dimension " + std::to_string(i + 1),
               clusters[i].second == expected[i] ? 0.0 : 1.0, tol);

  std::vector<Eigen::MatrixXcd> bases(k);
  for (int i = 0; i < k; ++i) {
    int d = clusters[i].second;
    Eigen::MatrixXcd shifted = B - clusters[i].first * Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
    for (int t = 0; t < d; ++t) power = power * shifted;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(power, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double null_res = sv(n - d) / std::max(sv(0), 1e-300);
    report.add("generalized eigenspace nullity " + std::to_string(i + 1), null_res,
               std::sqrt(tol));
    bases[i] = svd.matrixV().rightCols(d);
  }

  for (int i = 0; i < k; ++i) {
    const Eigen::MatrixXcd& Q = bases[i];
    int d = clusters[i].second;
    Eigen::MatrixXcd restricted = Q.adjoint() * A * Q;
    double inv_res = (A * Q - Q * restricted).norm() / scale_a;
    report.add("A-invariance of U_" + std::to_string(i + 1), inv_res, tol);

    // Regularity: nilpotent of rank d - 1 (one Jordan block), or 2(d/2) - 2 in
    // case III (two paired blocks).
    int expected_rank = (pair.case_tag == CaseTag::III) ? d - 2 : d - 1;
    Eigen::JacobiSVD<Eigen::MatrixXcd> rsvd(restricted);
    const auto& rs = rsvd.singularValues();
    double rank_res = expected_rank < d ? rs(expected_rank) / scale_a : 1.0;
    if (expected_rank > 0 && rs(expected_rank - 1) / scale_a < std::sqrt(tol)) rank_res = 1.0;
    report.add("regularity of A|U_" + std::to_string(i + 1), rank_res, std::sqrt(tol));

    // B|_{U_i} = P_i(A|_{U_i}) with deg P_i <= n_i; report the residual and
    // record the achieved degree.
    int deg_bound = p.part(i);
    Eigen::MatrixXcd target = Q.adjoint() * B * Q;
    Eigen::MatrixXcd K(d * d, deg_bound + 1);
    Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(d, d);
    for (int t = 0; t <= deg_bound; ++t) {
      K.col(t) = Eigen::Map<Eigen::VectorXcd>(pw.data(), d * d);
      pw = pw * restricted;
    }
    Eigen::VectorXcd rhs = Eigen::Map<Eigen::VectorXcd>(target.data(), d * d);
    Eigen::VectorXcd coeff = K.colPivHouseholderQr().solve(rhs);
    double poly_res = (K * coeff - rhs).norm() / scale_b;
    report.add("polynomial identity on U_" + std::to_string(i + 1), poly_res, tol);
    double cmax = coeff.cwiseAbs().maxCoeff();
    int deg = 0;
    for (int t = 0; t <= deg_bound; ++t)
      if (std::abs(coeff(t)) > 1e-8 * std::max(cmax, 1.0)) deg = t;
    report.poly_degree.push_back(deg);
  }

  if (pair.case_tag != CaseTag::I) {
    Eigen::MatrixXcd form = ratmat_to_complex(pair.form);
    double scale_f = std::max(1.0, form.norm());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        double ortho = (bases[i].transpose() * form * bases[j]).norm() / scale_f;
        report.add("form-orthogonality U_" + std::to_string(i + 1) + ", U_" +
                       std::to_string(j + 1),
                   ortho, tol);
      }
  }

  report.ok = true;
  for (const auto& c : report.checks) report.ok = report.ok && c.pass;
  return report;
}

}  // namespace morse
