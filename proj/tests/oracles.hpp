// Independent reference computations for the tests: deliberately different
// algorithms from the library (cofactor determinants, shoelace areas,
// zonotope subset-determinant volumes).
#pragma once

#include "mixvol/rational.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using mixvol::Point;
using mixvol::Rational;

// Cofactor expansion along the first row; fine for the small sizes tested.
inline Rational det_cofactor(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][j] * det_cofactor(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

// Exact counterclockwise order around the centroid (no trigonometry:
// half-plane split, then cross-product comparison).
inline std::vector<Point> ccw_order(std::vector<Point> pts) {
  Rational cx(0), cy(0);
  for (const Point& p : pts) {
    cx += p[0];
    cy += p[1];
  }
  const Rational m(static_cast<int>(pts.size()));
  cx /= m;
  cy /= m;
  auto half = [&](const Point& p) {
    const Rational dx = p[0] - cx, dy = p[1] - cy;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    const Rational cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
    return cross > 0;
  });
  return pts;
}

// Shoelace area of a convex polygon given by its vertex set in any order.
inline Rational polygon_area(const std::vector<Point>& vertices) {
  if (vertices.size() < 3) return Rational(0);
  const std::vector<Point> cycle = ccw_order(vertices);
  Rational twice(0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point& a = cycle[i];
    const Point& b = cycle[(i + 1) % cycle.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  if (twice < 0) twice = -twice;
  return twice / Rational(2);
}

// Volume of sum of segments [0, g_i]: sum over d-subsets of |det|.
inline Rational zonotope_volume(int d, const std::vector<Point>& generators) {
  std::vector<int> pick;
  Rational sum(0);
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (static_cast<int>(pick.size()) == d) {
      std::vector<std::vector<Rational>> m;
      for (int idx : pick) {
        m.push_back(std::vector<Rational>(generators[idx].begin(), generators[idx].end()));
      }
      Rational dv = det_cofactor(m);
      if (dv < 0) dv = -dv;
      sum += dv;
      return;
    }
    for (std::size_t i = next; i < generators.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return sum;
}

}  // namespace oracle
