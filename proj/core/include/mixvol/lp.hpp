#pragma once

#include "mixvol/linalg.hpp"
#include "mixvol/rational.hpp"

#include <vector>

namespace mixvol {

// Decides whether { y >= 0 : A y = b } is nonempty, exactly.
// Phase-1 simplex with Bland's rule; terminates on any rational input.
bool linear_feasibility(const Matrix& a, const std::vector<Rational>& b);

// x in conv(generators)? Feasibility of the convex-combination system.
bool in_convex_hull(const std::vector<Point>& generators, const Point& x);

}  // namespace mixvol
