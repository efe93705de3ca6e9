#pragma once

#include "mixvol/rational.hpp"

#include <vector>

namespace mixvol {

// Dense row-major rational matrix. Small sizes only; all arithmetic exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  static Matrix from_rows(const std::vector<Point>& rows);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Result of fraction-free-style exact Gaussian elimination with partial
// (first nonzero) pivoting. pivot_cols/pivot_rows index into the original
// matrix; both are strictly increasing in elimination order for columns.
struct Elimination {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<int> pivot_rows;
};

Elimination eliminate(Matrix m);

int rank(const Matrix& m);

// Determinant of a square matrix.
Rational determinant(const Matrix& m);

// Solves m x = rhs for square nonsingular m; throws std::runtime_error if
// m is singular.
std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& rhs);

// One nonzero kernel vector of an (r x c) matrix with rank < c; throws if
// the kernel is trivial.
std::vector<Rational> kernel_vector(const Matrix& m);

// A linear map x -> entries * x plus named constructors for the maps used
// throughout: block embeddings, projections and sign flips.
class LinearMap {
 public:
  LinearMap(int target_dim, int source_dim);

  int target_dim() const { return target_; }
  int source_dim() const { return source_; }
  Rational& at(int r, int c) { return entries_.at(r, c); }
  const Rational& at(int r, int c) const { return entries_.at(r, c); }
  const Matrix& matrix() const { return entries_; }

  Point apply(const Point& x) const;
  bool injective() const;

  static LinearMap identity(int n);
  static LinearMap negation(int n);
  static LinearMap scaling(int n, const Rational& factor);

 private:
  int target_ = 0;
  int source_ = 0;
  Matrix entries_;
};

}  // namespace mixvol
