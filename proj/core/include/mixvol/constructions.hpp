#pragma once

#include "mixvol/covers.hpp"
#include "mixvol/linalg.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/rational.hpp"

#include <vector>

namespace mixvol {

// conv{0, c_1 e_1, ..., c_n e_n}; all c_i > 0. The equality case of every
// inequality in this library.
VPolytope axis_simplex(const std::vector<Rational>& c);

// Hull of all coordinate-zeroings of the generators; anti-blocking by the
// down-closed characterization.
VPolytope staircase_antiblocking(int n, const std::vector<Point>& generators);

// P in the nonnegative orthant and closed under coordinate zeroing.
// Zeroing maps are linear, so checking single-coordinate zeroings of the
// vertices suffices.
bool is_antiblocking(const VPolytope& p);

// x -> (x,...,x) into (R^n)^p.
LinearMap diagonal_embedding_map(int n, int p);
VPolytope diagonal_embed(const VPolytope& p, int power);

// x -> (0,...,x,...,0) into the i-th factor (1-based i).
LinearMap factor_embedding_map(int n, int p, int i);
VPolytope factor_embed(const VPolytope& body, int i, int power);

// (x_1,...,x_p) -> (-x_1, x_2-x_1, ..., x_p-x_1); an involution exchanging
// the diagonal with the first factor inclusion.
LinearMap diagonal_factor_exchange_map(int n, int p);

// Swaps the i-th and j-th blocks (1-based).
LinearMap factor_swap_map(int n, int p, int i, int j);

// (x_0, x_1, ..., x_p) -> (x_1-x_0, ..., x_p-x_0); descends the quotient
// by the diagonal.
LinearMap base_difference_map(int n, int p);

// R^{|sigma|} -> R^ground, placing coordinates at the members of sigma.
LinearMap subset_embed_map(const CoordinateSubset& sigma);

// R^ground -> R^{ground-|sigma|}, deleting the members of sigma
// (orthogonal projection onto the complementary coordinates).
LinearMap subset_delete_map(const CoordinateSubset& sigma);

// The translation-tuple body {(x_1,...,x_p) : K and its x_i-translates all
// meet}, computed as diagonal_embed(K,p) - K^p.
VPolytope higher_difference_body(const VPolytope& body, int power);

// Hull of all 2^n coordinate sign-flips of an anti-blocking body.
VPolytope hat_symmetrization(const VPolytope& body);

// K cap E_sigma of an anti-blocking body, as a body in R^{|sigma|}
// (coordinates indexed by sigma); equals the projection of the vertex set.
VPolytope antiblocking_section(const VPolytope& body, const CoordinateSubset& sigma);

// Same section kept inside R^n (coordinates outside sigma zeroed).
VPolytope antiblocking_restriction(const VPolytope& body, const CoordinateSubset& sigma);

enum class SimplexClass { simplex, not_simplex, degenerate };

// Axis-simplex classification of an anti-blocking body; `degenerate` when
// the interior is empty.
SimplexClass is_axis_simplex(const VPolytope& body);

}  // namespace mixvol
