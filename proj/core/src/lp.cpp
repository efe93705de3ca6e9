#include "mixvol/lp.hpp"

#include <stdexcept>

namespace mixvol {

bool linear_feasibility(const Matrix& a, const std::vector<Rational>& b) {
  const int m = a.rows();
  const int n = a.cols();
  if (static_cast<int>(b.size()) != m) {
    throw std::invalid_argument("linear_feasibility: size mismatch");
  }

  // Minimize the sum of artificial variables s in [A | I][y; s] = b', b' >= 0.
  // Feasible iff the optimum is zero.
  const int total = n + m;
  Matrix t(m, total + 1);
  for (int i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (int j = 0; j < n; ++j) t.at(i, j) = flip ? -a.at(i, j) : a.at(i, j);
    t.at(i, n + i) = Rational(1);
    t.at(i, total) = flip ? -b[i] : b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced-cost row for the phase-1 objective: cost 1 on artificials.
  std::vector<Rational> red(total + 1, Rational(0));
  for (int j = 0; j <= total; ++j) {
    Rational colsum(0);
    for (int i = 0; i < m; ++i) colsum += t.at(i, j);
    red[j] = (j >= n && j < total ? Rational(1) : Rational(0)) - colsum;
  }

  while (true) {
    // Bland: entering variable = smallest index with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < total; ++j) {
      if (red[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    // Ratio test; ties by smallest basis variable (Bland).
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t.at(i, enter) <= 0) continue;
      const Rational ratio = t.at(i, total) / t.at(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) {
      // Phase-1 objective is bounded below by zero; unreachable on valid input.
      throw std::runtime_error("linear_feasibility: unbounded phase-1 pivot");
    }

    const Rational inv = Rational(1) / t.at(leave, enter);
    for (int j = 0; j <= total; ++j) t.at(leave, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const Rational factor = t.at(i, enter);
      if (factor == 0) continue;
      for (int j = 0; j <= total; ++j) t.at(i, j) -= factor * t.at(leave, j);
    }
    {
      const Rational factor = red[enter];
      if (factor != 0) {
        for (int j = 0; j <= total; ++j) red[j] -= factor * t.at(leave, j);
      }
    }
    basis[leave] = enter;
  }

  // Optimum value of sum(s) is -red[total].
  return red[total] == 0;
}

bool in_convex_hull(const std::vector<Point>& generators, const Point& x) {
  if (generators.empty()) return false;
  const int d = static_cast<int>(x.size());
  const int m = static_cast<int>(generators.size());
  Matrix a(d + 1, m);
  std::vector<Rational> b(d + 1);
  for (int j = 0; j < m; ++j) {
    if (static_cast<int>(generators[j].size()) != d) {
      throw std::invalid_argument("in_convex_hull: dimension mismatch");
    }
    for (int i = 0; i < d; ++i) a.at(i, j) = generators[j][i];
    a.at(d, j) = Rational(1);
  }
  for (int i = 0; i < d; ++i) b[i] = x[i];
  b[d] = Rational(1);
  return linear_feasibility(a, b);
}

}  // namespace mixvol
