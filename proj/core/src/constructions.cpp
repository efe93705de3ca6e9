#include "mixvol/constructions.hpp"

#include "mixvol/lp.hpp"

#include <stdexcept>

namespace mixvol {

VPolytope axis_simplex(const std::vector<Rational>& c) {
  const int n = static_cast<int>(c.size());
  if (n == 0) throw std::invalid_argument("axis_simplex: empty scale list");
  std::vector<Point> points;
  points.push_back(Point(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    if (c[i] <= 0) throw std::invalid_argument("axis_simplex: nonpositive scale");
    Point v(n, Rational(0));
    v[i] = c[i];
    points.push_back(std::move(v));
  }
  return hull(n, std::move(points));
}

VPolytope staircase_antiblocking(int n, const std::vector<Point>& generators) {
  if (generators.empty()) throw std::invalid_argument("staircase_antiblocking: no generators");
  std::vector<Point> points;
  for (const Point& g : generators) {
    if (static_cast<int>(g.size()) != n) {
      throw std::invalid_argument("staircase_antiblocking: dimension mismatch");
    }
    for (const Rational& x : g) {
      if (x < 0) throw std::invalid_argument("staircase_antiblocking: negative coordinate");
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Point p(n, Rational(0));
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) p[i] = g[i];
      }
      points.push_back(std::move(p));
    }
  }
  return hull(n, std::move(points));
}

bool is_antiblocking(const VPolytope& p) {
  const int n = p.ambient_dim();
  for (const Point& v : p.vertices()) {
    for (const Rational& x : v) {
      if (x < 0) return false;
    }
  }
  for (const Point& v : p.vertices()) {
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      Point z = v;
      z[i] = Rational(0);
      if (!in_convex_hull(p.vertices(), z)) return false;
    }
  }
  return true;
}

LinearMap diagonal_embedding_map(int n, int p) {
  if (p < 1) throw std::invalid_argument("diagonal_embedding_map: p < 1");
  LinearMap m(p * n, n);
  for (int b = 0; b < p; ++b) {
    for (int i = 0; i < n; ++i) m.at(b * n + i, i) = Rational(1);
  }
  return m;
}

VPolytope diagonal_embed(const VPolytope& p, int power) {
  return affine_image(diagonal_embedding_map(p.ambient_dim(), power), p);
}

LinearMap factor_embedding_map(int n, int p, int i) {
  if (p < 1) throw std::invalid_argument("factor_embedding_map: p < 1");
  if (i < 1 || i > p) throw std::invalid_argument("factor_embedding_map: index out of range");
  LinearMap m(p * n, n);
  for (int c = 0; c < n; ++c) m.at((i - 1) * n + c, c) = Rational(1);
  return m;
}

VPolytope factor_embed(const VPolytope& body, int i, int power) {
  return affine_image(factor_embedding_map(body.ambient_dim(), power, i), body);
}

LinearMap diagonal_factor_exchange_map(int n, int p) {
  if (p < 1) throw std::invalid_argument("diagonal_factor_exchange_map: p < 1");
  LinearMap m(p * n, p * n);
  for (int c = 0; c < n; ++c) {
    m.at(c, c) = Rational(-1);
    for (int b = 1; b < p; ++b) {
      m.at(b * n + c, b * n + c) = Rational(1);
      m.at(b * n + c, c) = Rational(-1);
    }
  }
  return m;
}

LinearMap factor_swap_map(int n, int p, int i, int j) {
  if (i < 1 || i > p || j < 1 || j > p) {
    throw std::invalid_argument("factor_swap_map: index out of range");
  }
  LinearMap m = LinearMap::identity(p * n);
  if (i == j) return m;
  for (int c = 0; c < n; ++c) {
    m.at((i - 1) * n + c, (i - 1) * n + c) = Rational(0);
    m.at((j - 1) * n + c, (j - 1) * n + c) = Rational(0);
    m.at((i - 1) * n + c, (j - 1) * n + c) = Rational(1);
    m.at((j - 1) * n + c, (i - 1) * n + c) = Rational(1);
  }
  return m;
}

LinearMap base_difference_map(int n, int p) {
  if (p < 1) throw std::invalid_argument("base_difference_map: p < 1");
  LinearMap m(p * n, (p + 1) * n);
  for (int b = 0; b < p; ++b) {
    for (int c = 0; c < n; ++c) {
      m.at(b * n + c, (b + 1) * n + c) = Rational(1);
      m.at(b * n + c, c) = Rational(-1);
    }
  }
  return m;
}

LinearMap subset_embed_map(const CoordinateSubset& sigma) {
  LinearMap m(sigma.ground, sigma.size());
  for (int j = 0; j < sigma.size(); ++j) m.at(sigma.members[j], j) = Rational(1);
  return m;
}

LinearMap subset_delete_map(const CoordinateSubset& sigma) {
  const CoordinateSubset rest = sigma.complement();
  LinearMap m(rest.size(), sigma.ground);
  for (int j = 0; j < rest.size(); ++j) m.at(j, rest.members[j]) = Rational(1);
  return m;
}

VPolytope higher_difference_body(const VPolytope& body, int power) {
  const VPolytope diag = diagonal_embed(body, power);
  const VPolytope prod = cartesian_power(body, power);
  return minkowski_sum(diag, dilate(prod, Rational(-1)));
}

VPolytope hat_symmetrization(const VPolytope& body) {
  if (!is_antiblocking(body)) {
    throw std::invalid_argument("hat_symmetrization: non-anti-blocking input");
  }
  const int n = body.ambient_dim();
  std::vector<Point> points;
  points.reserve(body.vertex_count() << n);
  for (const Point& v : body.vertices()) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Point p = v;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) p[i] = -p[i];
      }
      points.push_back(std::move(p));
    }
  }
  return hull(n, std::move(points));
}

namespace {

std::vector<Point> zeroed_outside(const VPolytope& body, const CoordinateSubset& sigma) {
  std::vector<Point> points;
  points.reserve(body.vertex_count());
  for (const Point& v : body.vertices()) {
    Point p(body.ambient_dim(), Rational(0));
    for (int i : sigma.members) p[i] = v[i];
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace

VPolytope antiblocking_section(const VPolytope& body, const CoordinateSubset& sigma) {
  if (!is_antiblocking(body)) {
    throw std::invalid_argument("antiblocking_section: non-anti-blocking input");
  }
  if (sigma.ground != body.ambient_dim()) {
    throw std::invalid_argument("antiblocking_section: ground-set mismatch");
  }
  std::vector<Point> points;
  points.reserve(body.vertex_count());
  for (const Point& v : body.vertices()) {
    Point p(sigma.size());
    for (int j = 0; j < sigma.size(); ++j) p[j] = v[sigma.members[j]];
    points.push_back(std::move(p));
  }
  return hull(sigma.size(), std::move(points));
}

VPolytope antiblocking_restriction(const VPolytope& body, const CoordinateSubset& sigma) {
  if (!is_antiblocking(body)) {
    throw std::invalid_argument("antiblocking_restriction: non-anti-blocking input");
  }
  if (sigma.ground != body.ambient_dim()) {
    throw std::invalid_argument("antiblocking_restriction: ground-set mismatch");
  }
  return hull(body.ambient_dim(), zeroed_outside(body, sigma));
}

SimplexClass is_axis_simplex(const VPolytope& body) {
  if (!is_antiblocking(body)) {
    throw std::invalid_argument("is_axis_simplex: non-anti-blocking input");
  }
  const int n = body.ambient_dim();
  if (body.affine_dim() < n) return SimplexClass::degenerate;
  if (static_cast<int>(body.vertex_count()) != n + 1) return SimplexClass::not_simplex;
  std::vector<bool> axis_used(n, false);
  for (const Point& v : body.vertices()) {
    int support = -1;
    bool zero = true;
    for (int i = 0; i < n; ++i) {
      if (v[i] != 0) {
        if (!zero || support >= 0) return SimplexClass::not_simplex;  // support size > 1
        zero = false;
        support = i;
      }
    }
    if (zero) continue;  // the origin vertex
    if (axis_used[support]) return SimplexClass::not_simplex;
    axis_used[support] = true;
  }
  for (bool used : axis_used) {
    if (!used) return SimplexClass::not_simplex;
  }
  return SimplexClass::simplex;
}

}  // namespace mixvol
