#include "mixvol/polytope.hpp"

#include "mixvol/lp.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <utility>

namespace mixvol {

namespace {

std::atomic<int> g_hull_limit{8};

void check_points(int ambient_dim, const std::vector<Point>& points) {
  if (ambient_dim < 0) throw std::invalid_argument("hull: negative dimension");
  if (points.empty()) throw std::invalid_argument("hull: empty point set");
  for (const Point& p : points) {
    if (static_cast<int>(p.size()) != ambient_dim) {
      throw std::invalid_argument("hull: point dimension mismatch");
    }
  }
}

void check_limit(int ambient_dim) {
  const int limit = hull_dimension_limit();
  if (ambient_dim > limit) {
    throw std::domain_error("hull: dimension " + std::to_string(ambient_dim) +
                            " exceeds the soft limit " + std::to_string(limit) +
                            " (raise the limit to proceed)");
  }
}

Rational dot(const std::vector<Rational>& a, const Point& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * b[i];
  }
  return s;
}

// Scales (normal, offset) by a positive rational so the normal has coprime
// integer entries; canonical form for detecting coplanar facet pieces.
void make_primitive(std::vector<Rational>& normal, Rational& offset) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer l(1);
  for (const Rational& x : normal) l = lcm(l, denominator(x));
  Integer g(0);
  for (const Rational& x : normal) g = gcd(g, abs(numerator(x) * (l / denominator(x))));
  if (g == 0) throw std::logic_error("make_primitive: zero normal");
  const Rational scale = make_rational(l, g);
  for (Rational& x : normal) x *= scale;
  offset *= scale;
}

struct Facet {
  std::vector<int> corners;      // sorted point indices, affinely independent
  std::vector<Rational> normal;  // outward, primitive integer entries
  Rational offset;               // <normal, x> = offset on the facet plane
  bool alive = true;
};

// Incremental beneath-beyond hull in full-dimensional working coordinates.
// Facets stay simplicial; horizon ridges are those appearing exactly once
// among the visible facets.
struct HullMachine {
  int r;
  const std::vector<Point>& pts;
  Point interior;  // strictly interior to the starting simplex, hence to the hull
  std::vector<Facet> facets;
  std::size_t dead = 0;

  HullMachine(int r_, const std::vector<Point>& pts_) : r(r_), pts(pts_) {}

  Facet make_facet(std::vector<int> corners) const {
    std::vector<Point> rows;
    rows.reserve(r - 1);
    for (int j = 1; j < r; ++j) {
      Point row(r);
      for (int c = 0; c < r; ++c) row[c] = pts[corners[j]][c] - pts[corners[0]][c];
      rows.push_back(std::move(row));
    }
    Facet f;
    f.corners = std::move(corners);
    f.normal = kernel_vector(Matrix::from_rows(rows));
    f.offset = dot(f.normal, pts[f.corners[0]]);
    const Rational side = dot(f.normal, interior) - f.offset;
    if (side == 0) throw std::logic_error("hull: degenerate facet orientation");
    if (side > 0) {
      for (Rational& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    make_primitive(f.normal, f.offset);
    return f;
  }

  void compact() {
    if (dead * 2 <= facets.size()) return;
    std::erase_if(facets, [](const Facet& f) { return !f.alive; });
    dead = 0;
  }

  void insert(int t) {
    const Point& q = pts[t];
    std::vector<int> visible;
    for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
      if (facets[i].alive && dot(facets[i].normal, q) > facets[i].offset) {
        visible.push_back(i);
      }
    }
    if (visible.empty()) return;

    std::map<std::vector<int>, int> ridge_count;
    for (int i : visible) {
      for (int drop = 0; drop < r; ++drop) {
        std::vector<int> ridge = facets[i].corners;
        ridge.erase(ridge.begin() + drop);
        ++ridge_count[ridge];
      }
    }
    std::vector<Facet> fresh;
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;  // interior to the visible region
      std::vector<int> corners = ridge;
      corners.insert(std::lower_bound(corners.begin(), corners.end(), t), t);
      fresh.push_back(make_facet(std::move(corners)));
    }
    for (int i : visible) facets[i].alive = false;
    dead += visible.size();
    compact();
    for (Facet& f : fresh) facets.push_back(std::move(f));
  }

  void run(const std::vector<int>& simplex) {
    interior.assign(r, Rational(0));
    for (int s : simplex) {
      for (int c = 0; c < r; ++c) interior[c] += pts[s][c];
    }
    const Rational inv = make_rational(Integer(1), Integer(r + 1));
    for (Rational& x : interior) x *= inv;

    for (int drop = 0; drop <= r; ++drop) {
      std::vector<int> corners;
      for (int j = 0; j <= r; ++j) {
        if (j != drop) corners.push_back(simplex[j]);
      }
      std::sort(corners.begin(), corners.end());
      facets.push_back(make_facet(std::move(corners)));
    }
    std::vector<bool> used(pts.size(), false);
    for (int s : simplex) used[s] = true;
    for (int t = 0; t < static_cast<int>(pts.size()); ++t) {
      if (!used[t]) insert(t);
    }
  }

  // True extreme points among the facet corners: a corner is a vertex iff
  // its active supporting hyperplanes (deduplicated across coplanar facet
  // pieces) span the full working dimension.
  std::vector<int> certified_vertices() const {
    std::map<std::string, std::pair<std::vector<Rational>, Rational>> planes;
    std::vector<int> candidates;
    {
      std::vector<bool> seen(pts.size(), false);
      for (const Facet& f : facets) {
        if (!f.alive) continue;
        std::string key;
        for (const Rational& x : f.normal) key += to_string(x) + ",";
        key += "|" + to_string(f.offset);
        planes.emplace(std::move(key), std::make_pair(f.normal, f.offset));
        for (int c : f.corners) {
          if (!seen[c]) {
            seen[c] = true;
            candidates.push_back(c);
          }
        }
      }
    }
    std::vector<int> result;
    for (int c : candidates) {
      std::vector<Point> active;
      for (const auto& [key, plane] : planes) {
        if (dot(plane.first, pts[c]) == plane.second) active.push_back(plane.first);
      }
      if (static_cast<int>(active.size()) >= r && rank(Matrix::from_rows(active)) == r) {
        result.push_back(c);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  Rational cone_volume() const {
    // Cone over the lexicographically smallest point (index 0, a vertex).
    Rational total(0);
    for (const Facet& f : facets) {
      if (!f.alive) continue;
      if (std::find(f.corners.begin(), f.corners.end(), 0) != f.corners.end()) continue;
      Matrix m(r, r);
      for (int i = 0; i < r; ++i) {
        for (int c = 0; c < r; ++c) m.at(i, c) = pts[f.corners[i]][c] - pts[0][c];
      }
      total += abs(determinant(m));
    }
    Integer fact(1);
    for (int i = 2; i <= r; ++i) fact *= i;
    return total / Rational(fact);
  }
};

struct HullOutcome {
  int rank = 0;
  std::vector<int> vertex_indices;
  Rational volume{0};
};

// points must be lex-sorted and unique. want_vertices selects the (more
// expensive) certification pass; want_volume the cone volume, which is only
// meaningful when the rank equals ambient_dim.
HullOutcome analyze_hull(int ambient_dim, const std::vector<Point>& points, bool want_vertices,
                         bool want_volume) {
  HullOutcome out;
  const int m = static_cast<int>(points.size());
  if (m == 1) {
    out.rank = 0;
    out.vertex_indices = {0};
    out.volume = ambient_dim == 0 ? Rational(1) : Rational(0);
    return out;
  }

  std::vector<Point> diffs;
  diffs.reserve(m - 1);
  for (int i = 1; i < m; ++i) {
    Point row(ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) row[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(row));
  }
  const Elimination elim = eliminate(Matrix::from_rows(diffs));
  out.rank = elim.rank;
  if (out.rank < ambient_dim && want_volume && !want_vertices) return out;  // volume 0

  // Projection to the pivot coordinates is injective on the affine hull.
  std::vector<Point> proj(m, Point(out.rank));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < out.rank; ++j) proj[i][j] = points[i][elim.pivot_cols[j]];
  }

  if (out.rank == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < m; ++i) {
      if (proj[i][0] < proj[lo][0]) lo = i;
      if (proj[i][0] > proj[hi][0]) hi = i;
    }
    out.vertex_indices = {std::min(lo, hi), std::max(lo, hi)};
    if (want_volume && out.rank == ambient_dim) out.volume = proj[hi][0] - proj[lo][0];
    return out;
  }

  HullMachine machine(out.rank, proj);
  std::vector<int> simplex{0};
  for (int row : elim.pivot_rows) simplex.push_back(row + 1);
  machine.run(simplex);
  if (want_vertices) out.vertex_indices = machine.certified_vertices();
  if (want_volume && out.rank == ambient_dim) out.volume = machine.cone_volume();
  return out;
}

}  // namespace

int hull_dimension_limit() { return g_hull_limit.load(); }

void set_hull_dimension_limit(int limit) {
  if (limit < 0) throw std::invalid_argument("set_hull_dimension_limit: negative limit");
  g_hull_limit.store(limit);
}

void sort_unique_points(std::vector<Point>& points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

VPolytope hull(int ambient_dim, std::vector<Point> points) {
  check_points(ambient_dim, points);
  check_limit(ambient_dim);
  sort_unique_points(points);
  if (ambient_dim == 0) return VPolytope(0, {Point{}}, 0);
  const HullOutcome out = analyze_hull(ambient_dim, points, /*want_vertices=*/true,
                                       /*want_volume=*/false);
  std::vector<Point> verts;
  verts.reserve(out.vertex_indices.size());
  for (int i : out.vertex_indices) verts.push_back(points[i]);
  return VPolytope(ambient_dim, std::move(verts), out.rank);
}

Rational volume_of_points(int ambient_dim, std::vector<Point> points) {
  check_points(ambient_dim, points);
  check_limit(ambient_dim);
  sort_unique_points(points);
  if (ambient_dim == 0) return Rational(1);
  return analyze_hull(ambient_dim, points, /*want_vertices=*/false, /*want_volume=*/true).volume;
}

Rational volume(const VPolytope& p) {
  if (p.affine_dim() < p.ambient_dim()) return Rational(0);
  if (p.ambient_dim() == 0) return Rational(1);
  return volume_of_points(p.ambient_dim(), p.vertices());
}

VPolytope affine_image(const LinearMap& map, const VPolytope& p) {
  if (map.source_dim() != p.ambient_dim()) {
    throw std::invalid_argument("affine_image: dimension mismatch");
  }
  std::vector<Point> mapped;
  mapped.reserve(p.vertex_count());
  for (const Point& v : p.vertices()) mapped.push_back(map.apply(v));
  if (map.injective()) {
    // Injective maps send extreme points to extreme points.
    std::sort(mapped.begin(), mapped.end(), lex_less);
    return VPolytope(map.target_dim(), std::move(mapped), p.affine_dim());
  }
  return hull(map.target_dim(), std::move(mapped));
}

VPolytope affine_image(const LinearMap& map, const VPolytope& p, const Point& shift) {
  return translate(affine_image(map, p), shift);
}

VPolytope translate(const VPolytope& p, const Point& shift) {
  if (static_cast<int>(shift.size()) != p.ambient_dim()) {
    throw std::invalid_argument("translate: dimension mismatch");
  }
  std::vector<Point> verts = p.vertices();
  for (Point& v : verts) {
    for (int c = 0; c < p.ambient_dim(); ++c) v[c] += shift[c];
  }
  return VPolytope(p.ambient_dim(), std::move(verts), p.affine_dim());
}

VPolytope dilate(const VPolytope& p, const Rational& factor) {
  if (factor == 0) {
    return VPolytope(p.ambient_dim(), {Point(p.ambient_dim(), Rational(0))}, 0);
  }
  std::vector<Point> verts = p.vertices();
  for (Point& v : verts) {
    for (Rational& x : v) x *= factor;
  }
  if (factor < 0) std::reverse(verts.begin(), verts.end());
  return VPolytope(p.ambient_dim(), std::move(verts), p.affine_dim());
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  }
  const int d = p.ambient_dim();
  std::vector<Point> sums;
  sums.reserve(p.vertex_count() * q.vertex_count());
  for (const Point& v : p.vertices()) {
    for (const Point& w : q.vertices()) {
      Point s(d);
      for (int c = 0; c < d; ++c) s[c] = v[c] + w[c];
      sums.push_back(std::move(s));
    }
  }
  return hull(d, std::move(sums));
}

VPolytope cartesian_product(const VPolytope& p, const VPolytope& q) {
  std::vector<Point> verts;
  verts.reserve(p.vertex_count() * q.vertex_count());
  // Outer/inner loops in lex order keep the concatenated list lex-sorted.
  for (const Point& v : p.vertices()) {
    for (const Point& w : q.vertices()) {
      Point x = v;
      x.insert(x.end(), w.begin(), w.end());
      verts.push_back(std::move(x));
    }
  }
  return VPolytope(p.ambient_dim() + q.ambient_dim(), std::move(verts),
                   p.affine_dim() + q.affine_dim());
}

VPolytope cartesian_power(const VPolytope& p, int power) {
  if (power < 0) throw std::invalid_argument("cartesian_power: negative power");
  VPolytope out = hull(0, {Point{}});  // 0-dimensional unit for the product
  for (int i = 0; i < power; ++i) out = cartesian_product(out, p);
  return out;
}

bool contains(const VPolytope& p, const Point& x) {
  if (static_cast<int>(x.size()) != p.ambient_dim()) {
    throw std::invalid_argument("contains: dimension mismatch");
  }
  return in_convex_hull(p.vertices(), x);
}

std::string canonical_point_set_key(int ambient_dim, const std::vector<Point>& sorted_unique_points) {
  std::string key = std::to_string(ambient_dim) + ":";
  for (const Point& p : sorted_unique_points) {
    for (const Rational& x : p) {
      key += to_string(x);
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace mixvol
