#include "mixvol/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mixvol {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
}

Matrix Matrix::from_rows(const std::vector<Point>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    }
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Elimination eliminate(Matrix m) {
  Elimination result;
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<int> row_of(rows);
  for (int i = 0; i < rows; ++i) row_of[i] = i;

  int lead = 0;  // next working row (in permuted order)
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int i = lead; i < rows; ++i) {
      if (m.at(row_of[i], col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(row_of[lead], row_of[pivot]);
    const int pr = row_of[lead];
    const Rational inv = Rational(1) / m.at(pr, col);
    for (int j = col; j < cols; ++j) m.at(pr, j) *= inv;
    for (int i = lead + 1; i < rows; ++i) {
      const int ri = row_of[i];
      const Rational factor = m.at(ri, col);
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) m.at(ri, j) -= factor * m.at(pr, j);
    }
    result.pivot_cols.push_back(col);
    result.pivot_rows.push_back(pr);
    ++lead;
  }
  result.rank = lead;
  return result;
}

int rank(const Matrix& m) { return eliminate(m).rank; }

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  const int n = m.rows();
  Matrix work = m;
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (work.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(work.at(col, j), work.at(pivot, j));
      det = -det;
    }
    det *= work.at(col, col);
    const Rational inv = Rational(1) / work.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      const Rational factor = work.at(i, col) * inv;
      if (factor == 0) continue;
      for (int j = col; j < n; ++j) work.at(i, j) -= factor * work.at(col, j);
    }
  }
  return det;
}

std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& rhs) {
  if (m.rows() != m.cols()) throw std::invalid_argument("solve: non-square matrix");
  const int n = m.rows();
  if (static_cast<int>(rhs.size()) != n) throw std::invalid_argument("solve: size mismatch");
  Matrix work(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work.at(i, j) = m.at(i, j);
    work.at(i, n) = rhs[i];
  }
  // Gauss-Jordan on the augmented matrix.
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (work.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw std::runtime_error("solve: singular matrix");
    if (pivot != col) {
      for (int j = col; j <= n; ++j) std::swap(work.at(col, j), work.at(pivot, j));
    }
    const Rational inv = Rational(1) / work.at(col, col);
    for (int j = col; j <= n; ++j) work.at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const Rational factor = work.at(i, col);
      if (factor == 0) continue;
      for (int j = col; j <= n; ++j) work.at(i, j) -= factor * work.at(col, j);
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = work.at(i, n);
  return x;
}

std::vector<Rational> kernel_vector(const Matrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  Matrix work = m;
  // Reduced row echelon form, tracking pivot columns.
  std::vector<int> pivot_col_of_row;
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int i = lead; i < rows; ++i) {
      if (work.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int j = 0; j < cols; ++j) std::swap(work.at(lead, j), work.at(pivot, j));
    }
    const Rational inv = Rational(1) / work.at(lead, col);
    for (int j = col; j < cols; ++j) work.at(lead, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const Rational factor = work.at(i, col);
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) work.at(i, j) -= factor * work.at(lead, j);
    }
    pivot_col_of_row.push_back(col);
    ++lead;
  }
  // First free column yields a kernel vector.
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  }
  if (free_col < 0) throw std::runtime_error("kernel_vector: trivial kernel");
  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = Rational(1);
  for (int r = 0; r < static_cast<int>(pivot_col_of_row.size()); ++r) {
    v[pivot_col_of_row[r]] = -work.at(r, free_col);
  }
  return v;
}

LinearMap::LinearMap(int target_dim, int source_dim)
    : target_(target_dim), source_(source_dim), entries_(target_dim, source_dim) {
  if (target_dim < 0 || source_dim < 0) throw std::invalid_argument("LinearMap: negative dimension");
}

Point LinearMap::apply(const Point& x) const {
  if (static_cast<int>(x.size()) != source_) {
    throw std::invalid_argument("LinearMap::apply: dimension mismatch");
  }
  Point y(target_, Rational(0));
  for (int i = 0; i < target_; ++i) {
    for (int j = 0; j < source_; ++j) {
      if (entries_.at(i, j) != 0) y[i] += entries_.at(i, j) * x[j];
    }
  }
  return y;
}

bool LinearMap::injective() const { return rank(entries_) == source_; }

LinearMap LinearMap::identity(int n) {
  LinearMap m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

LinearMap LinearMap::negation(int n) { return scaling(n, Rational(-1)); }

LinearMap LinearMap::scaling(int n, const Rational& factor) {
  LinearMap m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = factor;
  return m;
}

}  // namespace mixvol
