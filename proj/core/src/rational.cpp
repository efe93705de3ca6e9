#include "mixvol/rational.hpp"

#include <stdexcept>

namespace mixvol {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  // Exact division of canonical rationals canonicalizes the result.
  return Rational(num) / Rational(den);
}

namespace {

Integer parse_integer(std::string_view text, std::string_view original) {
  if (text.empty()) {
    throw std::invalid_argument("parse_rational: empty number in '" + std::string(original) + "'");
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("parse_rational: sign without digits in '" + std::string(original) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("parse_rational: invalid character in '" + std::string(original) + "'");
    }
  }
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const Point& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(point[i]);
  }
  out += ")";
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool lex_less(const Point& a, const Point& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int cmp = a[i].compare(b[i]);
    if (cmp != 0) return cmp < 0;
  }
  return a.size() < b.size();
}

}  // namespace mixvol
