#pragma once

#include "mixvol/linalg.hpp"
#include "mixvol/rational.hpp"

#include <string>
#include <vector>

namespace mixvol {

// Convex polytope in V-representation.
//
// Invariants: vertices are exactly the extreme points (irredundant, also in
// degenerate configurations such as collinear boundary points), stored sorted
// lexicographically; affine_dim is the dimension of the affine hull and is
// computed eagerly.
class VPolytope {
 public:
  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  friend bool operator==(const VPolytope& a, const VPolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const VPolytope& a, const VPolytope& b) { return !(a == b); }

 private:
  VPolytope(int ambient_dim, std::vector<Point> vertices, int affine_dim)
      : ambient_dim_(ambient_dim), affine_dim_(affine_dim), vertices_(std::move(vertices)) {}

  int ambient_dim_ = 0;
  int affine_dim_ = 0;
  std::vector<Point> vertices_;  // canonical: lex-sorted, irredundant

  friend VPolytope hull(int ambient_dim, std::vector<Point> points);
  friend VPolytope affine_image(const LinearMap& map, const VPolytope& p);
  friend VPolytope translate(const VPolytope& p, const Point& shift);
  friend VPolytope dilate(const VPolytope& p, const Rational& factor);
  friend VPolytope cartesian_product(const VPolytope& p, const VPolytope& q);
};

// Soft guard against accidental high-dimensional hulls (exponential cost).
// Default limit is 8; CLI --force raises it.
int hull_dimension_limit();
void set_hull_dimension_limit(int limit);

// Convex hull of a nonempty point list; incremental beneath-beyond run in
// the affine hull, exact throughout.
VPolytope hull(int ambient_dim, std::vector<Point> points);

// d-dimensional Lebesgue volume; 0 when affine_dim < ambient_dim, and 1 for
// ambient dimension 0. Triangulates by the cone over the lexicographically
// smallest vertex.
Rational volume(const VPolytope& p);

// Volume of conv(points) without materializing the VPolytope.
Rational volume_of_points(int ambient_dim, std::vector<Point> points);

// Image under a linear map; skips re-hulling when the map is injective
// (extreme points stay extreme).
VPolytope affine_image(const LinearMap& map, const VPolytope& p);

// x -> map(x) + shift.
VPolytope affine_image(const LinearMap& map, const VPolytope& p, const Point& shift);

VPolytope translate(const VPolytope& p, const Point& shift);

// factor may be negative (reflection) or zero ({0}).
VPolytope dilate(const VPolytope& p, const Rational& factor);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);

// Vertex set of a product is the product of vertex sets; no hull needed.
VPolytope cartesian_product(const VPolytope& p, const VPolytope& q);
VPolytope cartesian_power(const VPolytope& p, int power);

// Exact membership via LP feasibility.
bool contains(const VPolytope& p, const Point& x);

// Canonical serialization of a point set (callers pass sorted unique
// points); used as memoization key and digest input.
std::string canonical_point_set_key(int ambient_dim, const std::vector<Point>& sorted_unique_points);

// Sorts lexicographically and removes exact duplicates.
void sort_unique_points(std::vector<Point>& points);

}  // namespace mixvol
