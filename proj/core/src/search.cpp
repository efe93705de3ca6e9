#include "mixvol/search.hpp"

#include "mixvol/constructions.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/verifiers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace mixvol {

SplitMix64 trial_stream(std::uint64_t master_seed, std::uint64_t trial) {
  return SplitMix64(master_seed ^ (0x9E3779B97F4A7C15ull * (trial + 1)));
}

std::string target_id(SearchTarget target) {
  switch (target) {
    case SearchTarget::rogers_shephard: return "rogers-shephard";
    case SearchTarget::godbersen: return "godbersen";
    case SearchTarget::schneider: return "schneider";
    case SearchTarget::conj1: return "conj1";
    case SearchTarget::conj2: return "conj2";
    case SearchTarget::alesker: return "alesker";
    case SearchTarget::decomposition: return "decomposition";
  }
  return "unknown";
}

bool parse_target(const std::string& id, SearchTarget& out) {
  for (SearchTarget t :
       {SearchTarget::rogers_shephard, SearchTarget::godbersen, SearchTarget::schneider,
        SearchTarget::conj1, SearchTarget::conj2, SearchTarget::alesker,
        SearchTarget::decomposition}) {
    if (target_id(t) == id) {
      out = t;
      return true;
    }
  }
  return false;
}

std::string body_class_id(BodyClass body_class) {
  return body_class == BodyClass::antiblocking ? "antiblocking" : "general";
}

bool parse_body_class(const std::string& id, BodyClass& out) {
  if (id == "antiblocking") {
    out = BodyClass::antiblocking;
    return true;
  }
  if (id == "general") {
    out = BodyClass::general;
    return true;
  }
  return false;
}

namespace {

Rational grid_coordinate(SplitMix64& rng, int grid_q) {
  return make_rational(Integer(1 + rng.below(grid_q)), Integer(grid_q));
}

}  // namespace

VPolytope random_staircase(SplitMix64& rng, int n, int grid_q, int max_generators) {
  const int count = 1 + static_cast<int>(rng.below(max_generators));
  std::vector<Point> generators;
  generators.reserve(count);
  for (int g = 0; g < count; ++g) {
    Point pt(n);
    for (int c = 0; c < n; ++c) pt[c] = grid_coordinate(rng, grid_q);
    generators.push_back(std::move(pt));
  }
  return staircase_antiblocking(n, generators);
}

VPolytope random_antiblocking_body(SplitMix64& rng, int n, int grid_q, int max_generators) {
  if (rng.below(8) == 0) {
    std::vector<Rational> sides(n);
    for (int c = 0; c < n; ++c) sides[c] = grid_coordinate(rng, grid_q);
    return axis_simplex(sides);
  }
  return random_staircase(rng, n, grid_q, max_generators);
}

VPolytope random_polytope(SplitMix64& rng, int n, int grid_q, int max_generators) {
  const int count = n + 1 + static_cast<int>(rng.below(max_generators));
  std::vector<Point> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) {
    Point pt(n);
    for (int c = 0; c < n; ++c) {
      pt[c] = make_rational(Integer(rng.below(2 * grid_q + 1)) - grid_q, Integer(grid_q));
    }
    points.push_back(std::move(pt));
  }
  return hull(n, std::move(points));
}

namespace {

void require_k_spec(const SearchConfig& config, std::size_t size, const char* what) {
  if (config.k_spec.size() != size) {
    throw std::invalid_argument(std::string("search: target needs ") + what);
  }
}

VerificationReport run_trial(const SearchConfig& config, int trial) {
  SplitMix64 rng = trial_stream(config.seed, trial);
  auto make_body = [&] {
    return config.body_class == BodyClass::antiblocking
               ? random_antiblocking_body(rng, config.n, config.grid_q, config.max_generators)
               : random_polytope(rng, config.n, config.grid_q, config.max_generators);
  };
  const VPolytope body = make_body();
  VolumeCache cache;
  switch (config.target) {
    case SearchTarget::rogers_shephard:
      return check_rogers_shephard(body, &cache);
    case SearchTarget::godbersen:
      require_k_spec(config, 1, "--k");
      return check_godbersen(body, config.k_spec[0], &cache);
    case SearchTarget::schneider:
      return check_schneider(body, config.p, &cache, /*with_witnesses=*/false);
    case SearchTarget::conj1:
      require_k_spec(config, 1, "--k");
      return check_conjecture1(body, config.p, config.k_spec[0], &cache,
                               /*with_witnesses=*/false);
    case SearchTarget::conj2:
      require_k_spec(config, static_cast<std::size_t>(config.p), "--kvec with p values");
      return check_conjecture2(body, config.p, config.k_spec, &cache,
                               /*with_witnesses=*/false);
    case SearchTarget::alesker:
      require_k_spec(config, static_cast<std::size_t>(config.p) + 1,
                     "--kvec with p+1 values summing to n");
      return alesker_coefficient(body, config.p, config.k_spec, &cache);
    case SearchTarget::decomposition: {
      if (config.body_class != BodyClass::antiblocking) {
        throw std::invalid_argument("search: decomposition needs --class antiblocking");
      }
      std::vector<VPolytope> l_bodies;
      for (int i = 0; i < config.p; ++i) {
        l_bodies.push_back(
            random_antiblocking_body(rng, config.n, config.grid_q, config.max_generators));
      }
      return check_decomposition(body, l_bodies, &cache);
    }
  }
  throw std::logic_error("search: unknown target");
}

}  // namespace

SearchSummary summarize(const std::vector<VerificationReport>& reports) {
  SearchSummary summary;
  summary.trials = static_cast<int>(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const VerificationReport& r = reports[i];
    if (i == 0 || r.gap < summary.min_gap) summary.min_gap = r.gap;
    if (is_violation(r)) ++summary.violations;
    if (r.equality) ++summary.equalities;
  }
  return summary;
}

SearchResult search_counterexamples(const SearchConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("search: trials must be >= 1");
  if (config.n < 1) throw std::invalid_argument("search: n must be >= 1");
  if (config.p < 1) throw std::invalid_argument("search: p must be >= 1");
  if (config.grid_q < 1) throw std::invalid_argument("search: grid denominator must be >= 1");
  if (config.max_generators < 1) {
    throw std::invalid_argument("search: generator count must be >= 1");
  }
  SearchResult result;
  result.reports.reserve(config.trials);
  for (int trial = 0; trial < config.trials; ++trial) {
    VerificationReport report = run_trial(config, trial);
    report.params.emplace_back("trial", std::int64_t{trial});
    result.reports.push_back(std::move(report));
  }
  result.summary = summarize(result.reports);
  // Worst (most negative) gaps first; trial index breaks ties so output is
  // byte-deterministic for a fixed seed.
  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return a.gap < b.gap;
                   });
  return result;
}

}  // namespace mixvol
