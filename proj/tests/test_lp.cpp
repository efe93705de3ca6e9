#include "doctest.h"

#include "mixvol/lp.hpp"

#include <vector>

using namespace mixvol;

namespace {

Matrix rows(const std::vector<Point>& r) { return Matrix::from_rows(r); }

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("feasibility of simple nonnegative systems") {
  // y1 = 1 with y >= 0: feasible.
  CHECK(linear_feasibility(rows({{Rational(1)}}), {Rational(1)}));
  // y1 = -1 with y >= 0: infeasible.
  CHECK_FALSE(linear_feasibility(rows({{Rational(1)}}), {Rational(-1)}));
  // y1 - y2 = -3: feasible via y = (0, 3).
  CHECK(linear_feasibility(rows({{Rational(1), Rational(-1)}}),
                           {Rational(-3)}));
}

TEST_CASE("feasibility with several equality constraints") {
  // y1 + y2 = 1, y1 - y2 = 0  ->  y = (1/2, 1/2) >= 0.
  CHECK(linear_feasibility(rows({{Rational(1), Rational(1)},
                                 {Rational(1), Rational(-1)}}),
                           {Rational(1), Rational(0)}));
  // y1 + y2 = 1, y1 + y2 = 2: inconsistent.
  CHECK_FALSE(linear_feasibility(rows({{Rational(1), Rational(1)},
                                       {Rational(1), Rational(1)}}),
                                 {Rational(1), Rational(2)}));
  // y1 + y2 = -1 forces a negative variable.
  CHECK_FALSE(linear_feasibility(rows({{Rational(1), Rational(1)}}),
                                 {Rational(-1)}));
}

TEST_CASE("feasibility with redundant rows and rational data") {
  // Same constraint twice stays feasible.
  CHECK(linear_feasibility(rows({{make_rational(1, 2), Rational(1)},
                                 {make_rational(1, 2), Rational(1)}}),
                           {make_rational(3, 2), make_rational(3, 2)}));
  // Zero right-hand side is always feasible (y = 0).
  CHECK(linear_feasibility(rows({{Rational(5), Rational(-7), Rational(2)}}),
                           {Rational(0)}));
}

TEST_CASE("convex hull membership in the unit square") {
  const std::vector<Point> square = {{Rational(0), Rational(0)},
                                     {Rational(1), Rational(0)},
                                     {Rational(0), Rational(1)},
                                     {Rational(1), Rational(1)}};
  CHECK(in_convex_hull(square, {make_rational(1, 2), make_rational(1, 2)}));
  CHECK(in_convex_hull(square, {Rational(1), make_rational(1, 2)}));  // edge
  CHECK(in_convex_hull(square, {Rational(0), Rational(0)}));          // vertex
  CHECK_FALSE(in_convex_hull(square, {Rational(2), Rational(0)}));
  CHECK_FALSE(
      in_convex_hull(square, {make_rational(1, 2), make_rational(-1, 100)}));
}

TEST_CASE("convex hull membership respects the affine hull") {
  const std::vector<Point> segment = {{Rational(0), Rational(0)},
                                      {Rational(1), Rational(0)}};
  CHECK(in_convex_hull(segment, {make_rational(1, 3), Rational(0)}));
  CHECK_FALSE(
      in_convex_hull(segment, {make_rational(1, 2), make_rational(1, 2)}));
  CHECK_FALSE(in_convex_hull(segment, {make_rational(3, 2), Rational(0)}));
}

TEST_CASE("convex hull membership with a single generator") {
  const std::vector<Point> point = {{Rational(2), Rational(-1)}};
  CHECK(in_convex_hull(point, {Rational(2), Rational(-1)}));
  CHECK_FALSE(in_convex_hull(point, {Rational(2), Rational(0)}));
}

TEST_CASE("interior membership in a triangle with rational queries") {
  const std::vector<Point> triangle = {{Rational(0), Rational(0)},
                                       {Rational(4), Rational(0)},
                                       {Rational(0), Rational(4)}};
  CHECK(in_convex_hull(triangle, {Rational(1), Rational(1)}));
  CHECK(in_convex_hull(triangle, {Rational(2), Rational(2)}));  // hypotenuse
  CHECK_FALSE(in_convex_hull(
      triangle, {Rational(2) + make_rational(1, 1000000), Rational(2)}));
}

}  // TEST_SUITE
