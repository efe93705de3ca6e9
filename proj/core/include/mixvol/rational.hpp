#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace mixvol {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// A point is a coordinate vector over the rationals.
using Point = std::vector<Rational>;

// Builds num/den in canonical form (reduced, positive denominator).
// Raw mpq construction from a pair does not canonicalize; all rational
// values in this library are canonical, so go through here.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p" or "p/q" with optional leading '-'; q must be positive after
// sign normalization and nonzero. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// Canonical textual form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

std::string to_string(const Point& point);

double to_double(const Rational& value);

// Lexicographic order on coordinate vectors; the canonical vertex order.
bool lex_less(const Point& a, const Point& b);

}  // namespace mixvol
