#include "doctest.h"

#include "mixvol/combinatorics.hpp"
#include "mixvol/constructions.hpp"
#include "mixvol/verifiers.hpp"

#include <stdexcept>
#include <vector>

using namespace mixvol;

namespace {

Point pt(std::initializer_list<Rational> coords) { return Point(coords); }

VPolytope unit_square() {
  return hull(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
}

VPolytope staircase_quad() {
  return staircase_antiblocking(2, {pt({2, 0}), pt({0, 1}), pt({1, 1})});
}

VPolytope unit_triangle() { return axis_simplex({Rational(1), Rational(1)}); }

// Holds, matched the predicted equality flag, and no witness misbehaved.
bool coherent(const VerificationReport& r) {
  return !is_violation(r) && r.equality == r.expected_equality;
}

const VerificationReport& find_witness(const VerificationReport& r,
                                       const std::string& name) {
  for (const auto& w : r.witnesses) {
    if (w.name == name) return w;
  }
  throw std::runtime_error("missing witness " + name);
}

}  // namespace

TEST_SUITE("verifiers") {

TEST_CASE("difference-body bound: simplices are tight, boxes are not") {
  const VerificationReport tri = check_rogers_shephard(unit_triangle());
  CHECK(tri.name == "rogers-shephard");
  CHECK(tri.lhs == 3);
  CHECK(tri.rhs == 3);
  CHECK(tri.equality);
  CHECK(tri.expected_equality);
  CHECK(tri.proven);
  CHECK(coherent(tri));
  CHECK_FALSE(tri.body_digest.empty());

  const VerificationReport sq = check_rogers_shephard(unit_square());
  CHECK(sq.lhs == 4);
  CHECK(sq.rhs == 6);
  CHECK(sq.gap == 2);
  CHECK_FALSE(sq.equality);
  CHECK(coherent(sq));

  // Degenerate input: both sides vanish and equality is the predicted state.
  const VerificationReport flat =
      check_rogers_shephard(hull(2, {pt({0, 0}), pt({1, 1})}));
  CHECK(flat.lhs == 0);
  CHECK(flat.rhs == 0);
  CHECK(coherent(flat));
}

TEST_CASE("asymmetric difference bound at each mixing index") {
  const VPolytope tri = unit_triangle();
  for (int k = 0; k <= 2; ++k) {
    const VerificationReport r = check_godbersen(tri, k);
    CHECK(r.name == "godbersen");
    CHECK(r.equality);
    CHECK(coherent(r));
  }
  CHECK(check_godbersen(tri, 1).lhs == 1);
  CHECK(check_godbersen(tri, 1).rhs == 1);

  // k = 0 is the plain volume on both sides for every body.
  const VerificationReport sq0 = check_godbersen(unit_square(), 0);
  CHECK(sq0.lhs == 1);
  CHECK(sq0.rhs == 1);
  CHECK(sq0.equality);
  CHECK(sq0.proven);

  const VerificationReport sq1 = check_godbersen(unit_square(), 1);
  CHECK(sq1.lhs == 1);
  CHECK(sq1.rhs == 2);
  CHECK_FALSE(sq1.equality);
  CHECK(coherent(sq1));

  CHECK_THROWS_AS(check_godbersen(tri, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_godbersen(tri, -1), std::invalid_argument);
}

TEST_CASE("translation-tuple volume bound with its expansion witnesses") {
  const VPolytope seg = hull(1, {pt({0}), pt({1})});
  const VerificationReport s = check_schneider(seg, 2);
  CHECK(s.name == "schneider");
  CHECK(s.lhs == 3);
  CHECK(s.rhs == 3);
  CHECK(s.equality);
  CHECK(s.expected_equality);
  CHECK(coherent(s));

  const VerificationReport tri = check_schneider(unit_triangle(), 2);
  CHECK(tri.lhs == make_rational(15, 4));
  CHECK(tri.rhs == make_rational(15, 4));
  CHECK(tri.equality);
  REQUIRE(tri.witnesses.size() == 4);  // k = 0, 1, 2 plus the sum check

  // The k-indexed expansion recombines to the lhs with binomial weights.
  Rational recombined = 0;
  for (int k = 0; k <= 2; ++k) {
    const VerificationReport& w = tri.witnesses[static_cast<std::size_t>(k)];
    CHECK(w.name == "conj1");
    CHECK(coherent(w));
    recombined += Rational(binomial(4, k)) * w.lhs;
  }
  CHECK(recombined == tri.lhs);
  const VerificationReport& sum = find_witness(tri, "schneider-expansion");
  CHECK(sum.lhs == sum.rhs);
  CHECK(sum.equality);
  CHECK(sum.proven);

  const VerificationReport sq = check_schneider(unit_square(), 2, nullptr,
                                                /*with_witnesses=*/false);
  CHECK(sq.witnesses.empty());
  CHECK(sq.gap > 0);
  CHECK(coherent(sq));

  CHECK_THROWS_AS(check_schneider(seg, 0), std::invalid_argument);
}

TEST_CASE("simultaneous-translate bound over the mixing index") {
  const VPolytope tri = unit_triangle();

  // k = 0 degenerates to the product volume on both sides, for any body.
  const VerificationReport q0 = check_conjecture1(staircase_quad(), 2, 0);
  CHECK(q0.name == "conj1");
  CHECK(q0.equality);
  CHECK(q0.proven);
  CHECK(coherent(q0));

  const VerificationReport t1 = check_conjecture1(tri, 2, 1);
  CHECK(t1.lhs == make_rational(1, 2));
  CHECK(t1.rhs == make_rational(1, 2));
  CHECK(t1.equality);
  CHECK(coherent(t1));

  // The composition-indexed expansion recombines to the lhs.
  REQUIRE(!t1.witnesses.empty());
  Rational recombined = 0;
  for (const auto& w : t1.witnesses) {
    if (w.name != "conj2") continue;
    std::vector<int> parts;
    for (const auto& [key, value] : w.params) {
      if (key.size() == 2 && key[0] == 'k' && key[1] >= '1' && key[1] <= '9')
        parts.push_back(static_cast<int>(std::get<std::int64_t>(value)));
    }
    REQUIRE(parts.size() == 2);
    std::vector<int> complement;
    for (int ki : parts) complement.push_back(2 - ki);
    recombined += Rational(multinomial(3, complement)) * w.lhs;
  }
  CHECK(recombined == t1.lhs);
  CHECK(find_witness(t1, "conj1-expansion").equality);

  // Strict for the quad at p = 1, k = 1 (matches the pairwise bound).
  const VerificationReport quad = check_conjecture1(staircase_quad(), 1, 1);
  CHECK(quad.gap > 0);
  CHECK(coherent(quad));

  CHECK_THROWS_AS(check_conjecture1(tri, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(check_conjecture1(tri, 0, 0), std::invalid_argument);
}

TEST_CASE("per-slot-translate bound: interval and triangle cases") {
  const VPolytope seg = hull(1, {pt({0}), pt({1})});
  const VerificationReport one = check_conjecture2(seg, 2, {1, 0});
  CHECK(one.name == "conj2");
  CHECK(one.lhs == make_rational(1, 2));
  CHECK(one.rhs == make_rational(1, 2));
  CHECK(one.equality);
  CHECK(coherent(one));

  const VerificationReport tri = check_conjecture2(unit_triangle(), 2, {1, 1});
  CHECK(tri.lhs == make_rational(1, 12));
  CHECK(tri.rhs == make_rational(1, 12));
  CHECK(tri.equality);
  CHECK(coherent(tri));

  // Zero mixing index: equality for every body, simplex or not.
  const VerificationReport zero = check_conjecture2(staircase_quad(), 2, {0, 0});
  CHECK(zero.equality);
  CHECK(zero.expected_equality);
  CHECK(zero.proven);

  // A full slot also forces equality for every body.
  const VerificationReport full = check_conjecture2(staircase_quad(), 2, {2, 0});
  CHECK(full.equality);
  CHECK(full.expected_equality);
  CHECK(full.proven);
  CHECK(coherent(full));

  CHECK_THROWS_AS(check_conjecture2(unit_triangle(), 2, {2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_conjecture2(unit_triangle(), 2, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_conjecture2(unit_triangle(), 2, {-1, 1}),
                  std::invalid_argument);
}

TEST_CASE("per-slot bound carries per-cover witnesses on anti-blocking input") {
  const VerificationReport tri = check_conjecture2(unit_triangle(), 2, {1, 1});
  int cover_witnesses = 0;
  for (const auto& w : tri.witnesses) {
    if (w.name != "conj2-cover" ) continue;
    ++cover_witnesses;
    CHECK(w.lhs == make_rational(1, 24));
    CHECK(w.lhs == w.rhs);  // direct mixed volume equals the closed form
    CHECK(w.equality);
    CHECK(w.proven);
  }
  CHECK(cover_witnesses == 2);
  const VerificationReport& sum = find_witness(tri, "conj2-cover-sum");
  CHECK(sum.lhs == tri.lhs);
  CHECK(sum.equality);
}

TEST_CASE("slot-elimination identity with a zero slot and at full mixing") {
  const VPolytope seg = hull(1, {pt({0}), pt({1})});
  const VerificationReport zero_slot = check_conjecture2_reduction(seg, 2, {1, 0});
  CHECK(zero_slot.name == "conj2-reduction");
  CHECK(zero_slot.lhs == zero_slot.rhs);
  CHECK(zero_slot.equality);
  CHECK(zero_slot.proven);
  CHECK(coherent(zero_slot));

  // k = n travels through the exchange involution first.
  const VerificationReport full = check_conjecture2_reduction(unit_triangle(), 2, {1, 1});
  CHECK(full.lhs == make_rational(1, 12));
  CHECK(full.lhs == full.rhs);
  CHECK(full.equality);
  CHECK_FALSE(full.witnesses.empty());
  CHECK(find_witness(full, "conj2-reduction-swap").equality);

  // Works on non-simplex bodies too: it is an identity, not a bound.
  const VerificationReport quad = check_conjecture2_reduction(staircase_quad(), 2, {0, 1});
  CHECK(quad.lhs == quad.rhs);
  CHECK(quad.equality);

  // Neither a zero slot nor full mixing: the reduction does not apply.
  CHECK_THROWS_AS(check_conjecture2_reduction(unit_triangle(), 2, {1, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      check_conjecture2_reduction(staircase_antiblocking(
                                      3, {pt({1, 1, 1})}),
                                  2, {1, 1}),
      std::invalid_argument);
}

TEST_CASE("sections-product lower bound for the symmetrization") {
  const VPolytope tri = unit_triangle();
  const UniformCover split = cover_from_text(2, 1, "1/2");
  const VerificationReport t = check_dual_bt(tri, split);
  CHECK(t.name == "dual-bt");
  CHECK(t.lhs == 2);
  CHECK(t.rhs == 2);
  CHECK(t.equality);
  CHECK(t.expected_equality);  // the hat is spanned by its axis sections
  CHECK(t.proven);
  CHECK(coherent(t));

  const VerificationReport s = check_dual_bt(unit_square(), split);
  CHECK(s.lhs == 2);
  CHECK(s.rhs == 4);
  CHECK_FALSE(s.equality);
  CHECK_FALSE(s.expected_equality);
  CHECK(coherent(s));

  const VerificationReport q =
      check_dual_bt(staircase_quad(), cover_from_text(2, 2, "1,2/1/2"));
  CHECK_FALSE(is_violation(q));
  CHECK(q.equality == q.expected_equality);

  CHECK_THROWS_AS(check_dual_bt(hull(2, {pt({0, 0}), pt({1, 1}), pt({2, 1})}),
                                split),
                  std::invalid_argument);
  // No interior: the symmetrization bound needs full dimension.
  CHECK_THROWS_AS(check_dual_bt(hull(2, {pt({0, 0}), pt({1, 0})}), split),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_dual_bt(tri, cover_from_text(2, 1, "1/1")),
                  std::invalid_argument);
}

TEST_CASE("piecewise decomposition of the translate-sum volume") {
  const VPolytope seg = hull(1, {pt({0}), pt({1})});
  const VerificationReport s = check_decomposition(seg, {seg});
  CHECK(s.name == "decomposition");
  CHECK(s.lhs == 2);  // length of [-1, 1]: the 1 + 1 split of the interval
  CHECK(s.rhs == 2);
  CHECK(s.equality);
  CHECK(s.proven);
  CHECK(coherent(s));

  // Two translate factors in dimension 1: the planar zonogon has area 3.
  const VerificationReport s2 = check_decomposition(seg, {seg, seg});
  CHECK(s2.lhs == 3);
  CHECK(s2.rhs == 3);
  CHECK(s2.equality);

  const VPolytope tri = unit_triangle();
  const VerificationReport h = check_decomposition(tri, {tri});
  CHECK(h.lhs == 3);  // the difference hexagon
  CHECK(h.rhs == 3);
  REQUIRE(h.witnesses.size() == 4);
  Rational pieces = 0;
  for (const auto& w : h.witnesses) {
    CHECK(w.name == "decomposition-piece");
    pieces += w.lhs;
  }
  CHECK(pieces == 3);

  // A point translate set contributes only the full-block piece.
  const VerificationReport p =
      check_decomposition(tri, {hull(2, {pt({0, 0})})});
  CHECK(p.lhs == volume(tri));
  CHECK(p.rhs == p.lhs);
  CHECK(p.equality);

  CHECK_THROWS_AS(check_decomposition(tri, {}), std::invalid_argument);
  CHECK_THROWS_AS(check_decomposition(hull(2, {pt({0, 0}), pt({1, 1}),
                                               pt({2, 1})}),
                                      {tri}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_decomposition(tri, {hull(1, {pt({0}), pt({1})})}),
                  std::invalid_argument);
}

TEST_CASE("closed form for a single cover piece") {
  const UniformCover cover = cover_from_text(2, 2, "1,2/2/1");
  CHECK(per_cover_closed_form(unit_triangle(), 2, {1, 1}, cover) ==
        make_rational(1, 24));

  // Block sizes must match (k, n - k_1, ..., n - k_p).
  CHECK_THROWS_AS(per_cover_closed_form(unit_triangle(), 2, {1, 0}, cover),
                  std::invalid_argument);
  CHECK_THROWS_AS(per_cover_closed_form(unit_triangle(), 2, {1}, cover),
                  std::invalid_argument);

  // Full mixing leaves the empty zeroth block: the piece is still positive.
  const UniformCover full = cover_from_text(2, 2, "-/1,2/1,2");
  CHECK(per_cover_closed_form(unit_triangle(), 2, {0, 0}, full) ==
        make_rational(1, 6) * make_rational(1, 4));
}

TEST_CASE("valuation-product coefficient stays below the volume power") {
  const VPolytope tri = unit_triangle();
  const VerificationReport t = alesker_coefficient(tri, 1, {1, 1});
  CHECK(t.name == "alesker");
  CHECK(t.lhs == make_rational(1, 2));
  CHECK(t.rhs == make_rational(1, 2));
  CHECK(t.equality);
  CHECK(coherent(t));

  const VerificationReport s = alesker_coefficient(unit_square(), 1, {1, 1});
  CHECK(s.lhs == make_rational(1, 2));
  CHECK(s.rhs == 1);
  CHECK_FALSE(s.equality);
  CHECK(coherent(s));

  // The all-in-one-slot partition is an exact identity for every body.
  const VerificationReport q = alesker_coefficient(staircase_quad(), 2, {0, 0, 2});
  CHECK(q.equality);
  CHECK(q.expected_equality);
  CHECK(q.proven);
  CHECK(q.lhs == volume(staircase_quad()) * volume(staircase_quad()));

  CHECK_THROWS_AS(alesker_coefficient(tri, 1, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(alesker_coefficient(tri, 1, {2}), std::invalid_argument);
  CHECK_THROWS_AS(alesker_coefficient(tri, 1, {-1, 3}), std::invalid_argument);
}

TEST_CASE("predicted equality flags hold across a parameter sweep") {
  const VPolytope tri = axis_simplex({Rational(1), Rational(2)});
  const VPolytope quad = staircase_quad();
  VolumeCache cache;

  for (int k = 0; k <= 2; ++k) {
    CHECK(coherent(check_godbersen(tri, k, &cache)));
    CHECK(coherent(check_godbersen(quad, k, &cache)));
    CHECK(coherent(check_conjecture1(tri, 2, k, &cache)));
    CHECK(coherent(check_conjecture1(quad, 2, k, &cache)));
  }
  for (const std::vector<int>& kvec :
       {std::vector<int>{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}) {
    CHECK(coherent(check_conjecture2(tri, 2, kvec, &cache)));
    CHECK(coherent(check_conjecture2(quad, 2, kvec, &cache)));
  }
  for (const std::vector<int>& partition :
       {std::vector<int>{0, 0, 2}, {0, 1, 1}, {1, 1, 0}, {2, 0, 0}}) {
    CHECK(coherent(alesker_coefficient(tri, 2, partition, &cache)));
    CHECK_FALSE(is_violation(alesker_coefficient(quad, 2, partition, &cache)));
  }

  // On an axis simplex every equality case is attained exactly.
  CHECK(check_conjecture2(tri, 2, {1, 1}, &cache).equality);
  CHECK(check_godbersen(tri, 1, &cache).equality);
  // On the quad the genuinely mixed cases are strict.
  CHECK(check_godbersen(quad, 1, &cache).gap > 0);
  CHECK(check_conjecture2(quad, 2, {1, 1}, &cache).gap > 0);
}

}  // TEST_SUITE
