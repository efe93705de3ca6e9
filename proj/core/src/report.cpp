#include "mixvol/report.hpp"

#include <cstdio>

namespace mixvol {

VerificationReport make_report(std::string name,
                               std::vector<std::pair<std::string, ReportParam>> params,
                               Rational lhs, Rational rhs, bool expected_equality, bool proven,
                               std::string body_digest) {
  VerificationReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.gap = r.rhs - r.lhs;
  r.equality = r.gap == 0;
  r.expected_equality = expected_equality;
  r.proven = proven;
  r.body_digest = std::move(body_digest);
  return r;
}

bool is_violation(const VerificationReport& report) {
  if (report.gap < 0) return true;
  if (report.proven && report.expected_equality && report.gap > 0) return true;
  for (const VerificationReport& w : report.witnesses) {
    if (is_violation(w)) return true;
  }
  return false;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_bodies(const std::vector<const VPolytope*>& bodies) {
  std::string all;
  for (const VPolytope* b : bodies) {
    all += canonical_point_set_key(b->ambient_dim(), b->vertices());
    all += '#';
  }
  const std::uint64_t h = fnv1a64(all);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace mixvol
