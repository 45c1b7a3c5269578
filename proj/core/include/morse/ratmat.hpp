#pragma once

#include <vector>

#include "morse/rational.hpp"

namespace morse {

// Dense matrix over exact rationals.  Sizes stay small (a few hundred rows),
// so the representation favors simplicity over sparsity; multiplication
// skips zero entries, which is what the generator matrices mostly are.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols);
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scaled(const Rat& c) const;
  RatMat transpose() const;
  RatMat pow(int e) const;

  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;
  bool is_identity() const;

  Rat trace() const;

  /// In-place reduced row echelon form; returns the pivot column indices.
  std::vector<int> rref();
  int rank() const;
  /// Basis of the right kernel (each vector has cols() entries).
  std::vector<std::vector<Rat>> kernel_basis() const;
  /// Inverse; throws std::domain_error if singular.
  RatMat inverse() const;

  /// Monic characteristic polynomial coefficients c_0..c_n with
  /// det(xI - M) = sum_j c_j x^{n-j}, c_0 = 1 (Faddeev-LeVerrier).
  std::vector<Rat> char_poly() const;

  /// Elementary symmetric functions (e_1, ..., e_n) of the eigenvalues.
  std::vector<Rat> elementary_symmetric() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

RatMat matrix_commutator(const RatMat& a, const RatMat& b);

// Row space of a set of vectors, kept in reduced echelon form; supports exact
// membership tests.
class RowSpace {
 public:
  explicit RowSpace(int dim) : dim_(dim) {}
  void add(const std::vector<Rat>& v);
  bool contains(const std::vector<Rat>& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  /// Reduces v against the stored rows; returns the remainder.
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  int dim_;
  std::vector<std::vector<Rat>> rows_;  // echelon, pivots normalized to 1
  std::vector<int> pivots_;
};

}  // namespace morse
