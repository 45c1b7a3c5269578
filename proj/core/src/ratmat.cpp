#include "morse/ratmat.hpp"

#include <stdexcept>

namespace morse {

RatMat::RatMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
  RatMat out(rows_, o.cols_);
  for (int k = 0; k < cols_; ++k)
    for (int j = 0; j < o.cols_; ++j) {
      const Rat& b = o(k, j);
      if (is_zero(b)) continue;
      for (int i = 0; i < rows_; ++i) {
        const Rat& a = (*this)(i, k);
        if (!is_zero(a)) out(i, j) += a * b;
      }
    }
  return out;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum size mismatch");
  RatMat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum size mismatch");
  RatMat out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

RatMat RatMat::transpose() const {
  RatMat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RatMat RatMat::pow(int e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow needs a square matrix");
  if (e < 0) throw std::invalid_argument("negative power");
  RatMat acc = identity(rows_);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool RatMat::is_zero() const {
  for (const auto& x : a_)
    if (!morse::is_zero(x)) return false;
  return true;
}

bool RatMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

Rat RatMat::trace() const {
  Rat t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

std::vector<int> RatMat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pr = -1;
    for (int i = row; i < rows_; ++i)
      if (!morse::is_zero((*this)(i, col))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < cols_; ++j) std::swap((*this)(pr, j), (*this)(row, j));
    Rat inv = Rat(1) / (*this)(row, col);
    for (int j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const Rat f = (*this)(i, col);
      if (morse::is_zero(f)) continue;
      for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RatMat::rank() const {
  RatMat copy = *this;
  return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Rat>> RatMat::kernel_basis() const {
  RatMat copy = *this;
  std::vector<int> pivots = copy.rref();
  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -copy(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse needs a square matrix");
  RatMat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = 1;
  }
  std::vector<int> pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
    throw std::domain_error("matrix is singular");
  RatMat out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = aug(i, cols_ + j);
  return out;
}

std::vector<Rat> RatMat::char_poly() const {
  if (rows_ != cols_) throw std::invalid_argument("char_poly needs a square matrix");
  int n = rows_;
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = 1;
  RatMat m(n, n);  // zero
  for (int k = 1; k <= n; ++k) {
    // M_k = A * (M_{k-1} + c_{k-1} I)
    RatMat step = m;
    for (int i = 0; i < n; ++i) step(i, i) += c[k - 1];
    m = *this * step;
    c[k] = -m.trace() / Rat(k);
  }
  return c;
}

std::vector<Rat> RatMat::elementary_symmetric() const {
  std::vector<Rat> c = char_poly();
  std::vector<Rat> e(rows_);
  for (int j = 1; j <= rows_; ++j) e[j - 1] = (j % 2 == 0) ? c[j] : -c[j];
  return e;
}

RatMat matrix_commutator(const RatMat& a, const RatMat& b) { return a * b - b * a; }

void RowSpace::add(const std::vector<Rat>& v) {
  std::vector<Rat> r = reduce(v);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (!morse::is_zero(r[j])) {
      pivot = j;
      break;
    }
  if (pivot < 0) return;
  Rat inv = Rat(1) / r[pivot];
  for (auto& x : r) x *= inv;
  // Back-substitute into existing rows to keep the echelon reduced.
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat f = rows_[i][pivot];
    if (morse::is_zero(f)) continue;
    for (int j = 0; j < dim_; ++j) rows_[i][j] -= f * r[j];
  }
  // Insert keeping pivots sorted.
  size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < pivot) ++at;
  rows_.insert(rows_.begin() + at, std::move(r));
  pivots_.insert(pivots_.begin() + at, pivot);
}

bool RowSpace::contains(const std::vector<Rat>& v) const {
  std::vector<Rat> r = reduce(v);
  for (const auto& x : r)
    if (!morse::is_zero(x)) return false;
  return true;
}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector dimension mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat f = v[pivots_[i]];
    if (morse::is_zero(f)) continue;
    for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[i][j];
  }
  return v;
}

}  // namespace morse
