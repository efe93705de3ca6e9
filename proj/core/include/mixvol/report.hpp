#pragma once

#include "mixvol/polytope.hpp"
#include "mixvol/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mixvol {

using ReportParam = std::variant<std::int64_t, std::string>;

// Outcome of one checked statement. Every check claims lhs <= rhs, so
// gap = rhs - lhs and gap < 0 is a violation. Identity checks additionally
// carry proven && expected_equality, under which any nonzero gap violates.
struct VerificationReport {
  std::string name;
  std::vector<std::pair<std::string, ReportParam>> params;
  Rational lhs{0};
  Rational rhs{0};
  Rational gap{0};
  bool equality = false;
  bool expected_equality = false;
  bool proven = false;
  std::string body_digest;
  std::vector<VerificationReport> witnesses;
};

VerificationReport make_report(std::string name,
                               std::vector<std::pair<std::string, ReportParam>> params,
                               Rational lhs, Rational rhs, bool expected_equality, bool proven,
                               std::string body_digest);

// gap < 0, or a proven equality statement with nonzero gap, in this report
// or any witness.
bool is_violation(const VerificationReport& report);

// FNV-1a 64-bit over the canonical vertex serializations; stable across
// platforms (std::hash is not).
std::string digest_bodies(const std::vector<const VPolytope*>& bodies);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace mixvol
