#include "mixvol/verifiers.hpp"

#include "mixvol/combinatorics.hpp"
#include "mixvol/constructions.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace mixvol {

namespace {

bool has_interior(const VPolytope& body) { return body.affine_dim() == body.ambient_dim(); }

// Any simplex with nonempty interior (the equality class of the general
// statements; for anti-blocking bodies this coincides with the axis
// simplices).
bool is_full_simplex(const VPolytope& body) {
  return has_interior(body) &&
         static_cast<int>(body.vertex_count()) == body.ambient_dim() + 1;
}

void check_cap(int dim) {
  if (dim > hull_dimension_limit()) {
    throw std::domain_error("dimension cap exceeded: computation needs dimension " +
                            std::to_string(dim) + " > limit " +
                            std::to_string(hull_dimension_limit()));
  }
}

Rational body_volume(const VPolytope& body, VolumeCache* cache) {
  if (body.affine_dim() < body.ambient_dim()) return Rational(0);
  if (body.ambient_dim() == 0) return Rational(1);
  return cached_volume_of_points(body.ambient_dim(), body.vertices(), cache);
}

Rational integer_ratio(const Integer& num, const Integer& den) {
  return make_rational(num, den);
}

Rational power(const Rational& base, int exp) {
  Rational out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::vector<std::pair<std::string, ReportParam>> base_params(int n) {
  return {{"n", std::int64_t{n}}};
}

void append_kvec(std::vector<std::pair<std::string, ReportParam>>& params,
                 const std::vector<int>& kvec, int first_index = 1) {
  for (std::size_t i = 0; i < kvec.size(); ++i) {
    params.emplace_back("k" + std::to_string(first_index + static_cast<int>(i)),
                        std::int64_t{kvec[i]});
  }
}

// Restriction K cap E_sigma kept in R^n; callers have already established
// that the body is anti-blocking.
VPolytope restriction_nocheck(const VPolytope& body, const CoordinateSubset& sigma) {
  std::vector<Point> points;
  points.reserve(body.vertex_count());
  for (const Point& v : body.vertices()) {
    Point p(body.ambient_dim(), Rational(0));
    for (int i : sigma.members) p[i] = v[i];
    points.push_back(std::move(p));
  }
  return hull(body.ambient_dim(), std::move(points));
}

// vol_{|sigma|}(K cap E_sigma) without the anti-blocking re-check.
Rational section_volume_nocheck(const VPolytope& body, const CoordinateSubset& sigma,
                                VolumeCache* cache) {
  std::vector<Point> points;
  points.reserve(body.vertex_count());
  for (const Point& v : body.vertices()) {
    Point p(sigma.size());
    for (int j = 0; j < sigma.size(); ++j) p[j] = v[sigma.members[j]];
    points.push_back(std::move(p));
  }
  return cached_volume_of_points(sigma.size(), std::move(points), cache);
}

// Memoizes restrictions/section volumes across the covers of one check.
struct SectionScratch {
  const VPolytope& body;
  VolumeCache* cache;
  std::map<std::vector<int>, VPolytope> restrictions;
  std::map<std::vector<int>, Rational> section_volumes;

  const VPolytope& restriction(const CoordinateSubset& sigma) {
    auto it = restrictions.find(sigma.members);
    if (it == restrictions.end()) {
      it = restrictions.emplace(sigma.members, restriction_nocheck(body, sigma)).first;
    }
    return it->second;
  }

  const Rational& section_volume(const CoordinateSubset& sigma) {
    auto it = section_volumes.find(sigma.members);
    if (it == section_volumes.end()) {
      it = section_volumes.emplace(sigma.members, section_volume_nocheck(body, sigma, cache))
               .first;
    }
    return it->second;
  }
};

// Entries of the conjecture-2 style query for (possibly restricted) bodies:
// base with multiplicity k on -Delta_p(base), and n-k_i on i_i(factor_i).
MixedVolumeQuery conjecture2_query(const VPolytope& base, const std::vector<const VPolytope*>& factors,
                                   int p, const std::vector<int>& kvec, int k) {
  const int n = base.ambient_dim();
  std::vector<std::pair<VPolytope, int>> entries;
  if (k > 0) {
    entries.emplace_back(dilate(diagonal_embed(base, p), Rational(-1)), k);
  }
  for (int i = 0; i < p; ++i) {
    if (n - kvec[i] > 0) {
      entries.emplace_back(factor_embed(*factors[i], i + 1, p), n - kvec[i]);
    }
  }
  return MixedVolumeQuery::of(p * n, std::move(entries));
}

Rational conjecture2_rhs(int n, int p, const std::vector<int>& kvec, int k,
                         const Rational& vol_k_body) {
  std::vector<int> parts = kvec;
  const Integer coeff = binomial(n, k) * multinomial(k, parts);
  return Rational(coeff) * integer_ratio(pow(factorial(n), p), factorial(p * n)) *
         power(vol_k_body, p);
}

}  // namespace

VerificationReport check_rogers_shephard(const VPolytope& k_body, VolumeCache* cache) {
  const int n = k_body.ambient_dim();
  std::vector<Point> diffs;
  diffs.reserve(k_body.vertex_count() * k_body.vertex_count());
  for (const Point& v : k_body.vertices()) {
    for (const Point& w : k_body.vertices()) {
      Point d(n);
      for (int c = 0; c < n; ++c) d[c] = v[c] - w[c];
      diffs.push_back(std::move(d));
    }
  }
  const Rational lhs = cached_volume_of_points(n, std::move(diffs), cache);
  const Rational rhs = Rational(binomial(2 * n, n)) * body_volume(k_body, cache);
  const bool expected = !has_interior(k_body) || is_full_simplex(k_body);
  return make_report("rogers-shephard", base_params(n), lhs, rhs, expected, /*proven=*/true,
                     digest_bodies({&k_body}));
}

VerificationReport check_godbersen(const VPolytope& k_body, int k, VolumeCache* cache) {
  const int n = k_body.ambient_dim();
  if (k < 0 || k > n) throw std::invalid_argument("check_godbersen: k out of range");
  std::vector<std::pair<VPolytope, int>> entries;
  if (k > 0) entries.emplace_back(dilate(k_body, Rational(-1)), k);
  if (n - k > 0) entries.emplace_back(k_body, n - k);
  const Rational lhs = mixed_volume(MixedVolumeQuery::of(n, std::move(entries)), cache);
  const Rational rhs = Rational(binomial(n, k)) * body_volume(k_body, cache);
  const bool expected =
      k == 0 || k == n || !has_interior(k_body) || is_full_simplex(k_body);
  const bool proven = k <= 1 || k >= n - 1 || is_antiblocking(k_body);
  auto params = base_params(n);
  params.emplace_back("k", std::int64_t{k});
  return make_report("godbersen", std::move(params), lhs, rhs, expected, proven,
                     digest_bodies({&k_body}));
}

VerificationReport check_schneider(const VPolytope& k_body, int p, VolumeCache* cache,
                                   bool with_witnesses) {
  const int n = k_body.ambient_dim();
  if (p < 1) throw std::invalid_argument("check_schneider: p < 1");
  check_cap(p * n);
  const LinearMap diag = diagonal_embedding_map(n, p);
  const VPolytope product = cartesian_power(k_body, p);
  std::vector<Point> candidates;
  candidates.reserve(k_body.vertex_count() * product.vertex_count());
  for (const Point& v : k_body.vertices()) {
    const Point dv = diag.apply(v);
    for (const Point& w : product.vertices()) {
      Point x(p * n);
      for (int c = 0; c < p * n; ++c) x[c] = dv[c] - w[c];
      candidates.push_back(std::move(x));
    }
  }
  const Rational lhs = cached_volume_of_points(p * n, std::move(candidates), cache);
  const Rational volk = body_volume(k_body, cache);
  const Rational rhs = Rational(binomial(p * n + n, n)) * power(volk, p);
  const bool expected = !has_interior(k_body) || is_full_simplex(k_body);
  auto params = base_params(n);
  params.emplace_back("p", std::int64_t{p});
  VerificationReport report = make_report("schneider", std::move(params), lhs, rhs, expected,
                                          /*proven=*/true, digest_bodies({&k_body}));
  if (with_witnesses) {
    Rational expansion(0);
    for (int k = 0; k <= n; ++k) {
      VerificationReport term = check_conjecture1(k_body, p, k, cache, /*with_witnesses=*/false);
      expansion += Rational(binomial(p * n, k)) * term.lhs;
      report.witnesses.push_back(std::move(term));
    }
    report.witnesses.push_back(make_report("schneider-expansion", {{"n", std::int64_t{n}},
                                                                   {"p", std::int64_t{p}}},
                                           report.lhs, expansion, /*expected_equality=*/true,
                                           /*proven=*/true, report.body_digest));
  }
  return report;
}

VerificationReport check_conjecture1(const VPolytope& k_body, int p, int k, VolumeCache* cache,
                                     bool with_witnesses) {
  const int n = k_body.ambient_dim();
  if (p < 1) throw std::invalid_argument("check_conjecture1: p < 1");
  if (k < 0 || k > n) throw std::invalid_argument("check_conjecture1: k out of range");
  check_cap(p * n);
  std::vector<std::pair<VPolytope, int>> entries;
  if (k > 0) entries.emplace_back(dilate(diagonal_embed(k_body, p), Rational(-1)), k);
  if (p * n - k > 0) entries.emplace_back(cartesian_power(k_body, p), p * n - k);
  const Rational lhs = mixed_volume(MixedVolumeQuery::of(p * n, std::move(entries)), cache);
  const Rational volk = body_volume(k_body, cache);
  const Rational rhs = Rational(binomial(n, k)) * power(volk, p);
  // Equality clause as stated: for 0 < k it requires a simplex. The k = n
  // boundary (trivial equality when p = 1) is surfaced by the witnesses.
  const bool expected = k == 0 || !has_interior(k_body) || is_full_simplex(k_body);
  const bool proven =
      k == 0 || (p == 1 && (k <= 1 || k >= n - 1)) || is_antiblocking(k_body);
  auto params = base_params(n);
  params.emplace_back("p", std::int64_t{p});
  params.emplace_back("k", std::int64_t{k});
  VerificationReport report = make_report("conj1", std::move(params), lhs, rhs, expected, proven,
                                          digest_bodies({&k_body}));
  if (with_witnesses) {
    Rational expansion(0);
    for (const std::vector<int>& kvec : compositions(k, p, n)) {
      VerificationReport term = check_conjecture2(k_body, p, kvec, cache,
                                                  /*with_witnesses=*/false);
      std::vector<int> complement_parts;
      for (int ki : kvec) complement_parts.push_back(n - ki);
      expansion += Rational(multinomial(p * n - k, complement_parts)) * term.lhs;
      report.witnesses.push_back(std::move(term));
    }
    report.witnesses.push_back(make_report("conj1-expansion", {{"n", std::int64_t{n}},
                                                               {"p", std::int64_t{p}},
                                                               {"k", std::int64_t{k}}},
                                           report.lhs, expansion, /*expected_equality=*/true,
                                           /*proven=*/true, report.body_digest));
  }
  return report;
}

VerificationReport check_conjecture2(const VPolytope& k_body, int p, const std::vector<int>& kvec,
                                     VolumeCache* cache, bool with_witnesses) {
  const int n = k_body.ambient_dim();
  if (p < 1) throw std::invalid_argument("check_conjecture2: p < 1");
  if (static_cast<int>(kvec.size()) != p) {
    throw std::invalid_argument("check_conjecture2: expected p values k_1..k_p");
  }
  int k = 0;
  bool full_slot = false;
  for (int ki : kvec) {
    if (ki < 0 || ki > n) throw std::invalid_argument("check_conjecture2: k_i out of range");
    if (ki == n) full_slot = true;
    k += ki;
  }
  if (k > n) throw std::invalid_argument("check_conjecture2: k_1 + ... + k_p > n");
  check_cap(p * n);

  std::vector<const VPolytope*> factors(p, &k_body);
  const Rational lhs = mixed_volume(conjecture2_query(k_body, factors, p, kvec, k), cache);
  const Rational volk = body_volume(k_body, cache);
  const Rational rhs = conjecture2_rhs(n, p, kvec, k, volk);
  const bool expected =
      k == 0 || full_slot || !has_interior(k_body) || is_full_simplex(k_body);
  const bool anti = is_antiblocking(k_body);
  const bool proven = anti || k == 0 || full_slot ||
                      (p == 1 && (k <= 1 || k >= n - 1));
  auto params = base_params(n);
  params.emplace_back("p", std::int64_t{p});
  append_kvec(params, kvec);
  VerificationReport report = make_report("conj2", std::move(params), lhs, rhs, expected, proven,
                                          digest_bodies({&k_body}));

  if (with_witnesses && anti) {
    // Cover decomposition: each cover's closed form must match its direct
    // mixed volume, and the closed forms must sum back to the lhs.
    std::vector<int> sizes{k};
    for (int ki : kvec) sizes.push_back(n - ki);
    SectionScratch scratch{k_body, cache, {}, {}};
    Rational cover_sum(0);
    for (const UniformCover& cover : enumerate_covers(n, p, sizes)) {
      const Rational closed = per_cover_closed_form(k_body, p, kvec, cover, cache);
      std::vector<const VPolytope*> cover_factors;
      for (int i = 0; i < p; ++i) {
        cover_factors.push_back(&scratch.restriction(cover.blocks[i + 1]));
      }
      const Rational direct = mixed_volume(
          conjecture2_query(scratch.restriction(cover.blocks[0]), cover_factors, p, kvec, k),
          cache);
      cover_sum += closed;
      auto cover_params = base_params(n);
      cover_params.emplace_back("p", std::int64_t{p});
      append_kvec(cover_params, kvec);
      cover_params.emplace_back("cover", cover.to_text());
      report.witnesses.push_back(make_report("conj2-cover", std::move(cover_params), direct,
                                             closed, /*expected_equality=*/true, /*proven=*/true,
                                             report.body_digest));
    }
    report.witnesses.push_back(make_report("conj2-cover-sum", {{"n", std::int64_t{n}},
                                                               {"p", std::int64_t{p}}},
                                           report.lhs, cover_sum, /*expected_equality=*/true,
                                           /*proven=*/true, report.body_digest));
  }
  return report;
}

VerificationReport check_conjecture2_reduction(const VPolytope& k_body, int p,
                                               const std::vector<int>& kvec,
                                               VolumeCache* cache) {
  const int n = k_body.ambient_dim();
  if (p < 1) throw std::invalid_argument("check_conjecture2_reduction: p < 1");
  if (static_cast<int>(kvec.size()) != p) {
    throw std::invalid_argument("check_conjecture2_reduction: expected p values");
  }
  int k = 0;
  int zero_slot = -1;
  for (int i = 0; i < p; ++i) {
    if (kvec[i] < 0 || kvec[i] > n) {
      throw std::invalid_argument("check_conjecture2_reduction: k_i out of range");
    }
    if (kvec[i] == 0 && zero_slot < 0) zero_slot = i;
    k += kvec[i];
  }
  if (k > n) throw std::invalid_argument("check_conjecture2_reduction: k_1 + ... + k_p > n");
  if (zero_slot < 0 && k != n) {
    throw std::invalid_argument(
        "check_conjecture2_reduction: needs a zero slot or k = n");
  }
  check_cap(p * n);

  std::vector<const VPolytope*> factors(p, &k_body);
  const Rational lhs = mixed_volume(conjecture2_query(k_body, factors, p, kvec, k), cache);

  auto params = base_params(n);
  params.emplace_back("p", std::int64_t{p});
  append_kvec(params, kvec);
  VerificationReport report;

  std::vector<int> work_kvec = kvec;
  int work_k = k;
  std::vector<VerificationReport> witnesses;
  if (zero_slot < 0) {
    // k = n: exchange the diagonal with factor 1 (an exact mixed-volume
    // symmetry), producing an instance whose first slot is zero.
    std::vector<int> swapped{0};
    for (int i = 1; i < p; ++i) swapped.push_back(kvec[i]);
    const int swapped_k = n - kvec[0];
    const Rational swapped_lhs =
        mixed_volume(conjecture2_query(k_body, factors, p, swapped, swapped_k), cache);
    auto swap_params = base_params(n);
    swap_params.emplace_back("p", std::int64_t{p});
    append_kvec(swap_params, swapped);
    witnesses.push_back(make_report("conj2-reduction-swap", std::move(swap_params), lhs,
                                    swapped_lhs, /*expected_equality=*/true, /*proven=*/true,
                                    digest_bodies({&k_body})));
    work_kvec = swapped;
    work_k = swapped_k;
    zero_slot = 0;
  }

  // Slot zero_slot has full multiplicity n; splitting it off with the
  // exact-sequence identity leaves a (p-1)-factor instance times vol(K),
  // weighted by 1/C(pn, n).
  Rational reduced;
  if (p == 1) {
    reduced = Rational(1);
  } else {
    std::vector<int> rest_kvec;
    for (int i = 0; i < p; ++i) {
      if (i != zero_slot) rest_kvec.push_back(work_kvec[i]);
    }
    reduced = mixed_volume(
        conjecture2_query(k_body, std::vector<const VPolytope*>(p - 1, &k_body), p - 1,
                          rest_kvec, work_k),
        cache);
  }
  const Rational rhs = integer_ratio(factorial(n) * factorial(p * n - n), factorial(p * n)) *
                       body_volume(k_body, cache) * reduced;
  report = make_report("conj2-reduction", std::move(params), lhs, rhs,
                       /*expected_equality=*/true, /*proven=*/true, digest_bodies({&k_body}));
  report.witnesses = std::move(witnesses);
  return report;
}

VerificationReport check_dual_bt(const VPolytope& k_body, const UniformCover& cover,
                                 VolumeCache* cache) {
  const int n = k_body.ambient_dim();
  if (!is_antiblocking(k_body)) {
    throw std::invalid_argument("check_dual_bt: non-anti-blocking input");
  }
  if (!has_interior(k_body)) {
    throw std::invalid_argument(
        "check_dual_bt: empty interior (0 is not interior to the symmetrization)");
  }
  if (cover.ground != n || !cover.valid()) {
    throw std::invalid_argument("check_dual_bt: invalid cover");
  }
  const int p = cover.multiplicity;

  const VPolytope hat = hat_symmetrization(k_body);
  const Rational vol_hat = body_volume(hat, cache);

  SectionScratch scratch{k_body, cache, {}, {}};
  Rational product(1);
  Integer factorial_product(1);
  for (const CoordinateSubset& block : cover.blocks) {
    factorial_product *= factorial(block.size());
    // vol(Khat cap E_sigma) = 2^{|sigma|} vol(K cap E_sigma).
    product *= Rational(Integer(1) << block.size()) * scratch.section_volume(block);
  }
  const Rational lhs =
      integer_ratio(factorial_product, pow(factorial(n), p)) * product;
  const Rational rhs = power(vol_hat, p);

  // Equality criterion: the symmetrization is the hull of its sections over
  // the induced 1-uniform cover.
  const UniformCover induced = induced_one_cover(cover);
  std::vector<Point> union_points;
  for (const CoordinateSubset& block : induced.blocks) {
    for (const Point& v : scratch.restriction(block).vertices()) {
      for (unsigned mask = 0; mask < (1u << block.size()); ++mask) {
        Point q = v;
        for (int j = 0; j < block.size(); ++j) {
          if (mask & (1u << j)) q[block.members[j]] = -q[block.members[j]];
        }
        union_points.push_back(std::move(q));
      }
    }
  }
  const bool expected = hull(n, std::move(union_points)) == hat;

  auto params = base_params(n);
  params.emplace_back("p", std::int64_t{p});
  params.emplace_back("q", std::int64_t{static_cast<int>(cover.blocks.size())});
  params.emplace_back("cover", cover.to_text());
  return make_report("dual-bt", std::move(params), lhs, rhs, expected, /*proven=*/true,
                     digest_bodies({&k_body}));
}

VerificationReport check_decomposition(const VPolytope& k_body,
                                       const std::vector<VPolytope>& l_bodies,
                                       VolumeCache* cache) {
  const int n = k_body.ambient_dim();
  const int p = static_cast<int>(l_bodies.size());
  if (p < 1) throw std::invalid_argument("check_decomposition: need at least one L body");
  check_cap(p * n);
  if (!is_antiblocking(k_body)) {
    throw std::invalid_argument("check_decomposition: non-anti-blocking K");
  }
  for (const VPolytope& l : l_bodies) {
    if (l.ambient_dim() != n) {
      throw std::invalid_argument("check_decomposition: L dimension mismatch");
    }
    if (!is_antiblocking(l)) {
      throw std::invalid_argument("check_decomposition: non-anti-blocking L");
    }
  }

  // Candidate (w_1 - v, ..., w_p - v) runs over vertex tuples; this is the
  // vertex candidate set of -Delta_p K + sum i_i L_i.
  auto difference_candidates = [n, p](const VPolytope& base,
                                      const std::vector<const VPolytope*>& ls) {
    std::vector<Point> acc{Point(p * n, Rational(0))};
    std::vector<Point> next;
    for (int i = 0; i < p; ++i) {
      next.clear();
      next.reserve(acc.size() * ls[i]->vertex_count());
      for (const Point& base_pt : acc) {
        for (const Point& w : ls[i]->vertices()) {
          Point x = base_pt;
          for (int c = 0; c < n; ++c) x[i * n + c] += w[c];
          next.push_back(std::move(x));
        }
      }
      std::swap(acc, next);
    }
    next.clear();
    next.reserve(acc.size() * base.vertex_count());
    for (const Point& acc_pt : acc) {
      for (const Point& v : base.vertices()) {
        Point x = acc_pt;
        for (int i = 0; i < p; ++i) {
          for (int c = 0; c < n; ++c) x[i * n + c] -= v[c];
        }
        next.push_back(std::move(x));
      }
    }
    return next;
  };

  std::vector<const VPolytope*> ls;
  for (const VPolytope& l : l_bodies) ls.push_back(&l);
  const Rational lhs =
      cached_volume_of_points(p * n, difference_candidates(k_body, ls), cache);

  SectionScratch k_scratch{k_body, cache, {}, {}};
  std::vector<SectionScratch> l_scratch;
  l_scratch.reserve(p);
  for (const VPolytope& l : l_bodies) l_scratch.push_back(SectionScratch{l, cache, {}, {}});

  Rational piece_sum(0);
  std::vector<VerificationReport> witnesses;
  const std::string digest = [&] {
    std::vector<const VPolytope*> all{&k_body};
    for (const VPolytope& l : l_bodies) all.push_back(&l);
    return digest_bodies(all);
  }();
  for (const std::vector<int>& sizes : compositions(p * n, p + 1, n)) {
    for (const UniformCover& cover : enumerate_covers(n, p, sizes)) {
      std::vector<const VPolytope*> piece_ls;
      for (int i = 0; i < p; ++i) {
        piece_ls.push_back(&l_scratch[i].restriction(cover.blocks[i + 1]));
      }
      const Rational piece = cached_volume_of_points(
          p * n,
          difference_candidates(k_scratch.restriction(cover.blocks[0]), piece_ls), cache);
      piece_sum += piece;
      witnesses.push_back(make_report("decomposition-piece",
                                      {{"cover", cover.to_text()}}, piece, piece,
                                      /*expected_equality=*/true, /*proven=*/true, digest));
    }
  }

  auto params = base_params(n);
  params.emplace_back("p", std::int64_t{p});
  VerificationReport report = make_report("decomposition", std::move(params), lhs, piece_sum,
                                          /*expected_equality=*/true, /*proven=*/true, digest);
  report.witnesses = std::move(witnesses);
  return report;
}

Rational per_cover_closed_form(const VPolytope& k_body, int p, const std::vector<int>& kvec,
                               const UniformCover& cover, VolumeCache* cache) {
  const int n = k_body.ambient_dim();
  if (static_cast<int>(kvec.size()) != p) {
    throw std::invalid_argument("per_cover_closed_form: expected p values");
  }
  if (static_cast<int>(cover.blocks.size()) != p + 1) {
    throw std::invalid_argument("per_cover_closed_form: expected p+1 blocks");
  }
  int k = 0;
  for (int ki : kvec) k += ki;
  if (cover.blocks[0].size() != k) {
    throw std::invalid_argument("per_cover_closed_form: |sigma_0| must equal k");
  }
  for (int i = 0; i < p; ++i) {
    if (cover.blocks[i + 1].size() != n - kvec[i]) {
      throw std::invalid_argument("per_cover_closed_form: |sigma_i| must equal n - k_i");
    }
  }
  if (!is_antiblocking(k_body)) {
    throw std::invalid_argument("per_cover_closed_form: non-anti-blocking input");
  }
  std::vector<int> parts{k};
  for (int ki : kvec) parts.push_back(n - ki);
  Rational value = integer_ratio(Integer(1), multinomial(p * n, parts));
  value *= section_volume_nocheck(k_body, cover.blocks[0], cache);
  for (int i = 0; i < p; ++i) {
    value *= section_volume_nocheck(k_body, cover.blocks[i + 1], cache);
  }
  return value;
}

VerificationReport alesker_coefficient(const VPolytope& k_body, int p,
                                       const std::vector<int>& partition, VolumeCache* cache) {
  const int n = k_body.ambient_dim();
  if (p < 1) throw std::invalid_argument("alesker_coefficient: p < 1");
  if (static_cast<int>(partition.size()) != p + 1) {
    throw std::invalid_argument("alesker_coefficient: expected p+1 values k_0..k_p");
  }
  int sum = 0;
  for (int ki : partition) {
    if (ki < 0 || ki > n) throw std::invalid_argument("alesker_coefficient: k_i out of range");
    sum += ki;
  }
  if (sum != n) {
    throw std::invalid_argument("alesker_coefficient: partition must sum to n");
  }
  check_cap(p * n);

  // The query multiplicities are (n-k_0) on -Delta_p K and n-k_i on i_i K:
  // the conjecture-2 instance with k_i' = k_i for i >= 1.
  std::vector<int> kvec(partition.begin() + 1, partition.end());
  const int k = n - partition[0];
  std::vector<const VPolytope*> factors(p, &k_body);
  const Rational mv = mixed_volume(conjecture2_query(k_body, factors, p, kvec, k), cache);
  Integer factor_num = factorial(p * n);
  for (int ki : partition) factor_num *= factorial(ki);
  const Rational c = integer_ratio(factor_num, pow(factorial(n), p + 1)) * mv;
  const Rational volk = body_volume(k_body, cache);
  const Rational rhs = power(volk, p);

  bool full_slot = false;
  for (int ki : kvec) {
    if (ki == n) full_slot = true;
  }
  const bool expected =
      k == 0 || full_slot || !has_interior(k_body) || is_full_simplex(k_body);
  const bool proven = is_antiblocking(k_body) || k == 0 || full_slot ||
                      (p == 1 && (k <= 1 || k >= n - 1));

  auto params = base_params(n);
  params.emplace_back("p", std::int64_t{p});
  append_kvec(params, partition, /*first_index=*/0);
  params.emplace_back("note", std::string("stated for smooth bodies; polytopes by continuity"));
  VerificationReport report = make_report("alesker", std::move(params), c, rhs, expected, proven,
                                          digest_bodies({&k_body}));
  report.witnesses.push_back(check_conjecture2(k_body, p, kvec, cache, /*with_witnesses=*/false));
  return report;
}

}  // namespace mixvol
