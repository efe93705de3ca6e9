#include "mixvol/selftest.hpp"

#include "mixvol/combinatorics.hpp"
#include "mixvol/constructions.hpp"
#include "mixvol/covers.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/search.hpp"
#include "mixvol/verifiers.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace mixvol {

namespace {

constexpr std::uint64_t kSelftestSeed = 0x5e1f7e57ull;

// A report is coherent when it carries no violation and its equality flag
// matches the characterization it claims.
bool coherent(const VerificationReport& r) {
  return !is_violation(r) && r.equality == r.expected_equality;
}

bool exact_equality(const VerificationReport& r) {
  return coherent(r) && r.equality && r.expected_equality;
}

Rational rational_pow(const Rational& base, int exp) {
  Rational out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

bool vandermonde_battery() {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= 3; ++p) {
      if (!vandermonde_check_1(n, p)) return false;
      for (int k = 0; k <= n; ++k) {
        if (!vandermonde_check_2(n, p, k)) return false;
      }
    }
  }
  return true;
}

// V(iota_1 K[n], ..., iota_p K[n]) = (n!)^p / (pn)! * vol(K)^p.
bool factor_product_identity(bool quick) {
  const int bodies_per_case = quick ? 5 : 20;
  const std::vector<std::pair<int, int>> cases{{1, 2}, {1, 3}, {2, 2}};
  for (auto [n, p] : cases) {
    SplitMix64 rng = trial_stream(kSelftestSeed, 100 * n + p);
    for (int t = 0; t < bodies_per_case; ++t) {
      const VPolytope body = random_staircase(rng, n, 4, 3);
      VolumeCache cache;
      std::vector<std::pair<VPolytope, int>> entries;
      for (int i = 1; i <= p; ++i) entries.emplace_back(factor_embed(body, i, p), n);
      const Rational lhs = mixed_volume(MixedVolumeQuery::of(p * n, std::move(entries)), &cache);
      const Rational rhs = make_rational(pow(factorial(n), p), factorial(p * n)) *
                           rational_pow(volume(body), p);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool oracle_equivalence(bool quick) {
  const int max_dim = quick ? 3 : 4;
  SplitMix64 rng = trial_stream(kSelftestSeed, 7001);
  for (int q = 0; q < 10; ++q) {
    const int n = 1 + static_cast<int>(rng.below(max_dim));
    const int m = 1 + static_cast<int>(rng.below(n));
    // Split n into m positive multiplicities.
    std::vector<int> mults(m, 1);
    for (int extra = 0; extra < n - m; ++extra) ++mults[rng.below(m)];
    std::vector<std::pair<VPolytope, int>> entries;
    for (int i = 0; i < m; ++i) {
      entries.emplace_back(random_polytope(rng, n, 2, 3), mults[i]);
    }
    const MixedVolumeQuery query = MixedVolumeQuery::of(n, std::move(entries));
    VolumeCache cache;
    if (mixed_volume(query, &cache) != mixed_volume_interpolation(query, &cache)) return false;
  }
  return true;
}

// Anti-blocking cover-sum identity: the conj2 lhs equals the sum of the
// per-cover closed forms, and each closed form equals its direct mixed
// volume; all carried as witnesses of the conj2 report.
bool cover_sum_identity(bool quick) {
  const int trials = quick ? 3 : 5;
  SplitMix64 rng = trial_stream(kSelftestSeed, 9002);
  const std::vector<std::vector<int>> kvecs{{1, 1}, {1, 0}};
  for (int t = 0; t < trials; ++t) {
    const VPolytope body = random_antiblocking_body(rng, 2, 4, 3);
    for (const std::vector<int>& kvec : kvecs) {
      VolumeCache cache;
      const VerificationReport report =
          check_conjecture2(body, 2, kvec, &cache, /*with_witnesses=*/true);
      if (is_violation(report)) return false;
      bool found_sum = false;
      for (const VerificationReport& w : report.witnesses) {
        if (w.name == "conj2-cover-sum") {
          found_sum = true;
          if (!w.equality) return false;
        }
        if (w.name == "conj2-cover" && !w.equality) return false;
      }
      if (!found_sum) return false;
    }
  }
  return true;
}

bool simplex_equality_battery(bool quick) {
  VolumeCache cache;
  const VPolytope simplex2 = axis_simplex({Rational(1), Rational(1)});
  const VPolytope simplex3 = axis_simplex({Rational(1), Rational(1), Rational(1)});
  const VPolytope segment = axis_simplex({Rational(1)});
  const VPolytope triangle = simplex2;
  const VPolytope square = staircase_antiblocking(2, {Point{Rational(1), Rational(1)}});
  const VPolytope staircase = staircase_antiblocking(
      2, {Point{Rational(2), Rational(1) / Rational(2)}, Point{Rational(1), Rational(1)}});

  if (!exact_equality(check_rogers_shephard(simplex2, &cache))) return false;
  if (!exact_equality(check_rogers_shephard(simplex3, &cache))) return false;
  {
    const VerificationReport square_rs = check_rogers_shephard(square, &cache);
    if (!coherent(square_rs) || square_rs.equality) return false;
  }
  for (int k = 0; k <= 2; ++k) {
    if (!exact_equality(check_godbersen(simplex2, k, &cache))) return false;
  }
  for (int k = 0; k <= 3; ++k) {
    if (!exact_equality(check_godbersen(simplex3, k, &cache))) return false;
  }
  {
    const VerificationReport strict = check_godbersen(staircase, 1, &cache);
    if (!coherent(strict) || strict.equality) return false;
  }
  if (!exact_equality(check_schneider(segment, 2, &cache))) return false;
  if (!exact_equality(check_schneider(triangle, 2, &cache))) return false;
  if (!quick) {
    // 6-dimensional case: D_3 of the unit square, strict (not a simplex).
    const VerificationReport six = check_schneider(square, 3, &cache);
    if (!coherent(six) || six.equality) return false;
  }
  for (int k = 0; k <= 2; ++k) {
    if (!exact_equality(check_conjecture1(simplex2, 2, k, &cache))) return false;
  }
  if (!exact_equality(check_conjecture2(simplex2, 2, {1, 1}, &cache))) return false;
  if (!exact_equality(alesker_coefficient(simplex2, 2, {0, 1, 1}, &cache))) return false;
  return true;
}

// Negative control: a deliberately off-by-one constant must be caught.
bool fault_injection_control() {
  const VPolytope triangle = axis_simplex({Rational(1), Rational(1)});
  VolumeCache cache;
  const VerificationReport honest = check_rogers_shephard(triangle, &cache);
  const Rational perturbed_rhs =
      Rational(binomial(4, 2) - 1) * cached_volume_of_points(2, triangle.vertices(), &cache);
  // With the perturbed constant the "inequality" must break; this item
  // passes only if it fails to break, i.e. never.
  return honest.lhs <= perturbed_rhs;
}

}  // namespace

bool run_selftest(bool quick, bool inject_fault, std::ostream& out) {
  std::vector<std::pair<std::string, std::function<bool()>>> items;
  items.emplace_back("vandermonde identities (n<=6, p<=3)", [] { return vandermonde_battery(); });
  items.emplace_back("factor product identity on seeded staircases",
                     [quick] { return factor_product_identity(quick); });
  items.emplace_back("mixed volume oracle equivalence",
                     [quick] { return oracle_equivalence(quick); });
  items.emplace_back("anti-blocking cover-sum identity",
                     [quick] { return cover_sum_identity(quick); });
  items.emplace_back("simplex equality battery",
                     [quick] { return simplex_equality_battery(quick); });
  if (inject_fault) {
    items.emplace_back("fault injection control (expected to fail)",
                       [] { return fault_injection_control(); });
  }

  bool all_pass = true;
  for (const auto& [name, fn] : items) {
    const bool ok = fn();
    all_pass = all_pass && ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
  }
  out << (all_pass ? "selftest: all items passed" : "selftest: FAILURES detected") << "\n";
  return all_pass;
}

}  // namespace mixvol
