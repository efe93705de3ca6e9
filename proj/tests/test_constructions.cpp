#include "doctest.h"

#include "mixvol/constructions.hpp"
#include "mixvol/lp.hpp"
#include "mixvol/search.hpp"
#include "oracles.hpp"

#include <stdexcept>
#include <vector>

using namespace mixvol;

namespace {

Point pt(std::initializer_list<Rational> coords) { return Point(coords); }

VPolytope staircase_quad() {
  return staircase_antiblocking(
      2, {pt({2, 0}), pt({0, 1}), pt({1, 1})});
}

VPolytope unit_square() {
  return hull(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
}

// Membership in the translation-tuple body straight from its definition:
// (x_1,...,x_p) belongs iff some y lies in K and in every x_i + K. Encoded
// as one joint feasibility problem over convex-combination weights.
bool meets_all_translates(const VPolytope& k, const std::vector<Point>& xs) {
  const int n = k.ambient_dim();
  const int p = static_cast<int>(xs.size());
  const int m = static_cast<int>(k.vertex_count());
  const int cols = (p + 1) * m;
  // Rows: p+1 normalization rows, then n rows per translate matching
  // sum(lambda v) - sum(mu_i v) = x_i.
  Matrix a(p + 1 + p * n, cols);
  std::vector<Rational> b(static_cast<std::size_t>(p + 1 + p * n), Rational(0));
  for (int g = 0; g <= p; ++g) {
    for (int j = 0; j < m; ++j) a.at(g, g * m + j) = 1;
    b[g] = 1;
  }
  for (int i = 0; i < p; ++i) {
    for (int r = 0; r < n; ++r) {
      const int row = p + 1 + i * n + r;
      for (int j = 0; j < m; ++j) {
        a.at(row, j) = k.vertices()[j][r];
        a.at(row, (i + 1) * m + j) = -k.vertices()[j][r];
      }
      b[row] = xs[i][r];
    }
  }
  return linear_feasibility(a, b);
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("axis simplices have the product-over-factorial volume") {
  CHECK(volume(axis_simplex({Rational(1), Rational(1)})) == make_rational(1, 2));
  CHECK(volume(axis_simplex({Rational(1), Rational(1), Rational(1)})) ==
        make_rational(1, 6));
  CHECK(volume(axis_simplex({Rational(2), Rational(3)})) == 3);
  CHECK(axis_simplex({Rational(1), Rational(1)}).vertex_count() == 3);
  CHECK_THROWS_AS(axis_simplex({Rational(1), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(axis_simplex({Rational(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(axis_simplex({}), std::invalid_argument);
}

TEST_CASE("staircase bodies are hulls of all coordinate zeroings") {
  const VPolytope quad = staircase_quad();
  CHECK(quad.vertex_count() == 4);
  CHECK(contains(quad, pt({0, 0})));
  CHECK(contains(quad, pt({2, 0})));
  CHECK(contains(quad, pt({1, 1})));
  CHECK(contains(quad, pt({0, 1})));
  CHECK(volume(quad) == make_rational(3, 2));
  CHECK(volume(quad) == oracle::polygon_area(quad.vertices()));

  CHECK(staircase_antiblocking(2, {pt({1, 0}), pt({0, 1})}) ==
        axis_simplex({Rational(1), Rational(1)}));
  CHECK(staircase_antiblocking(2, {pt({1, 1})}) == unit_square());
}

TEST_CASE("anti-blocking recognition") {
  CHECK(is_antiblocking(staircase_quad()));
  CHECK(is_antiblocking(unit_square()));
  CHECK(is_antiblocking(axis_simplex({Rational(3), make_rational(1, 2)})));
  // Shifted square: misses the coordinate zeroings of its vertices.
  CHECK_FALSE(is_antiblocking(
      hull(2, {pt({1, 1}), pt({2, 1}), pt({1, 2}), pt({2, 2})})));
  // Diagonal segment: zeroing (1,1) -> (1,0) leaves the body.
  CHECK_FALSE(is_antiblocking(hull(2, {pt({0, 0}), pt({1, 1})})));
  // Negative coordinates are out immediately.
  CHECK_FALSE(is_antiblocking(hull(1, {pt({-1}), pt({1})})));
}

TEST_CASE("random staircases stay anti-blocking and down-closed") {
  SplitMix64 rng(321);
  for (int it = 0; it < 10; ++it) {
    const VPolytope k = random_staircase(rng, 3, 4, 4);
    CHECK(is_antiblocking(k));
    // Down-closedness: shrink a random mixture of vertices coordinatewise.
    for (int s = 0; s < 5; ++s) {
      const Point& v = k.vertices()[rng.below(k.vertex_count())];
      Point shrunk = v;
      for (auto& c : shrunk) c *= make_rational(1, 1 + static_cast<int>(rng.below(3)));
      CHECK(contains(k, shrunk));
    }
  }
}

TEST_CASE("diagonal and factor embeddings") {
  const VPolytope seg = hull(1, {pt({0}), pt({1})});
  const VPolytope diag = diagonal_embed(seg, 2);
  CHECK(diag.ambient_dim() == 2);
  CHECK(diag.affine_dim() == 1);
  CHECK(diag.vertices() == std::vector<Point>{pt({0, 0}), pt({1, 1})});

  const VPolytope first = factor_embed(seg, 1, 2);
  CHECK(first.vertices() == std::vector<Point>{pt({0, 0}), pt({1, 0})});
  const VPolytope second = factor_embed(seg, 2, 2);
  CHECK(second.vertices() == std::vector<Point>{pt({0, 0}), pt({0, 1})});

  // The factor embeddings tile the full product.
  CHECK(minkowski_sum(first, second) == cartesian_power(seg, 2));
  const VPolytope tri = axis_simplex({Rational(1), Rational(1)});
  CHECK(minkowski_sum(factor_embed(tri, 1, 2), factor_embed(tri, 2, 2)) ==
        cartesian_power(tri, 2));
}

TEST_CASE("the diagonal-factor exchange is an involution swapping embeddings") {
  const int n = 2, p = 3;
  const LinearMap ex = diagonal_factor_exchange_map(n, p);
  SplitMix64 rng(55);
  for (int it = 0; it < 10; ++it) {
    Point x(static_cast<std::size_t>(n * p));
    for (auto& c : x) c = Rational(static_cast<std::int64_t>(rng.below(11)) - 5);
    CHECK(ex.apply(ex.apply(x)) == x);
  }
  const VPolytope tri = axis_simplex({Rational(1), Rational(2)});
  CHECK(affine_image(ex, diagonal_embed(tri, p)) ==
        factor_embed(dilate(tri, -1), 1, p));
  CHECK(affine_image(ex, factor_embed(dilate(tri, -1), 1, p)) ==
        diagonal_embed(tri, p));
}

TEST_CASE("factor swaps and the base-difference map act as labeled") {
  const LinearMap swap = factor_swap_map(2, 2, 1, 2);
  CHECK(swap.apply(pt({1, 2, 3, 4})) == pt({3, 4, 1, 2}));

  const LinearMap base = base_difference_map(2, 2);
  CHECK(base.target_dim() == 4);
  CHECK(base.source_dim() == 6);
  CHECK(base.apply(pt({1, 1, 2, 3, 5, 8})) == pt({1, 2, 4, 7}));
}

TEST_CASE("subset embedding and deletion maps") {
  const CoordinateSubset sigma = CoordinateSubset::of(3, {0, 2});
  const LinearMap embed = subset_embed_map(sigma);
  CHECK(embed.apply(pt({5, 7})) == pt({5, 0, 7}));
  CHECK(embed.injective());
  const LinearMap erase = subset_delete_map(sigma);
  CHECK(erase.apply(pt({5, 6, 7})) == pt({6}));
}

TEST_CASE("translation-tuple bodies of the reference examples") {
  const VPolytope seg = hull(1, {pt({0}), pt({1})});
  const VPolytope square = unit_square();
  const VPolytope tri = axis_simplex({Rational(1), Rational(1)});

  const VPolytope d1_square = higher_difference_body(square, 1);
  CHECK(d1_square == hull(2, {pt({-1, -1}), pt({1, -1}), pt({-1, 1}), pt({1, 1})}));
  CHECK(volume(d1_square) == 4);

  const VPolytope d2_seg = higher_difference_body(seg, 2);
  CHECK(d2_seg.ambient_dim() == 2);
  CHECK(volume(d2_seg) == 3);
  CHECK(volume(d2_seg) ==
        oracle::zonotope_volume(2, {pt({1, 0}), pt({0, 1}), pt({-1, -1})}));

  const VPolytope d1_tri = higher_difference_body(tri, 1);
  CHECK(d1_tri.vertex_count() == 6);
  CHECK(volume(d1_tri) == 3);
}

TEST_CASE("translation-tuple membership matches the meeting condition") {
  const VPolytope tri = axis_simplex({Rational(1), Rational(1)});
  const VPolytope d2 = higher_difference_body(tri, 2);
  SplitMix64 rng(777);
  int inside = 0, outside = 0;
  for (int it = 0; it < 100; ++it) {
    // Sample from a box covering D_2 K and a margin around it.
    Point x1(2), x2(2);
    for (auto* x : {&x1, &x2})
      for (auto& c : *x)
        c = make_rational(static_cast<std::int64_t>(rng.below(17)) - 8, 8);
    Point joint = x1;
    joint.insert(joint.end(), x2.begin(), x2.end());
    const bool constructed = contains(d2, joint);
    CHECK(constructed == meets_all_translates(tri, {x1, x2}));
    (constructed ? inside : outside)++;
  }
  CHECK(inside > 0);
  CHECK(outside > 0);
}

TEST_CASE("hat symmetrization doubles each dimension's extent") {
  const VPolytope tri = axis_simplex({Rational(1), Rational(1)});
  const VPolytope hat_tri = hat_symmetrization(tri);
  CHECK(hat_tri ==
        hull(2, {pt({1, 0}), pt({-1, 0}), pt({0, 1}), pt({0, -1})}));
  CHECK(volume(hat_tri) == 2);

  CHECK(hat_symmetrization(unit_square()) ==
        hull(2, {pt({-1, -1}), pt({1, -1}), pt({-1, 1}), pt({1, 1})}));

  const VPolytope seg = hull(1, {pt({0}), pt({make_rational(3, 2)})});
  CHECK(hat_symmetrization(seg) ==
        hull(1, {pt({make_rational(-3, 2)}), pt({make_rational(3, 2)})}));

  SplitMix64 rng(808);
  for (int it = 0; it < 5; ++it) {
    const VPolytope k = random_staircase(rng, 2, 4, 4);
    CHECK(volume(hat_symmetrization(k)) == 4 * volume(k));
  }
  CHECK_THROWS_AS(hat_symmetrization(hull(2, {pt({0, 0}), pt({1, 1}),
                                              pt({2, 1}), pt({1, 2})})),
                  std::invalid_argument);
}

TEST_CASE("coordinate sections of staircase bodies") {
  const VPolytope quad = staircase_quad();

  const VPolytope on_x =
      antiblocking_section(quad, CoordinateSubset::of(2, {0}));
  CHECK(on_x.ambient_dim() == 1);
  CHECK(on_x.vertices() == std::vector<Point>{pt({0}), pt({2})});
  CHECK(volume(on_x) == 2);

  const VPolytope empty_sigma =
      antiblocking_section(quad, CoordinateSubset::empty(2));
  CHECK(empty_sigma.ambient_dim() == 0);
  CHECK(volume(empty_sigma) == 1);

  CHECK(antiblocking_section(quad, CoordinateSubset::full(2)) == quad);

  const VPolytope restricted =
      antiblocking_restriction(quad, CoordinateSubset::of(2, {0}));
  CHECK(restricted.ambient_dim() == 2);
  CHECK(restricted.vertices() == std::vector<Point>{pt({0, 0}), pt({2, 0})});

  // Sections of the hat equal the hat of the section: 2^|sigma| volume law.
  CHECK(volume(hat_symmetrization(on_x)) == 2 * volume(on_x));

  CHECK_THROWS_AS(antiblocking_section(quad, CoordinateSubset::of(3, {0})),
                  std::invalid_argument);
}

TEST_CASE("axis-simplex classification") {
  CHECK(is_axis_simplex(axis_simplex({Rational(1), Rational(2)})) ==
        SimplexClass::simplex);
  CHECK(is_axis_simplex(axis_simplex({make_rational(1, 3)})) ==
        SimplexClass::simplex);
  CHECK(is_axis_simplex(staircase_quad()) == SimplexClass::not_simplex);
  CHECK(is_axis_simplex(unit_square()) == SimplexClass::not_simplex);
  // Flat anti-blocking body: no interior.
  CHECK(is_axis_simplex(hull(2, {pt({0, 0}), pt({1, 0})})) ==
        SimplexClass::degenerate);
  CHECK_THROWS_AS(is_axis_simplex(hull(2, {pt({0, 0}), pt({1, 1})})),
                  std::invalid_argument);
}

}  // TEST_SUITE
