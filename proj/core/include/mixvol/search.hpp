#pragma once

#include "mixvol/polytope.hpp"
#include "mixvol/rational.hpp"
#include "mixvol/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mixvol {

// Deterministic 64-bit generator (splitmix64). Chosen over std::mt19937_64
// so that streams are reproducible byte-for-byte across standard libraries.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound); modulo bias is irrelevant for test-body
  // generation and keeps the stream platform-independent.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Independent per-trial stream so trials can be recomputed in isolation.
SplitMix64 trial_stream(std::uint64_t master_seed, std::uint64_t trial);

enum class SearchTarget {
  rogers_shephard,
  godbersen,
  schneider,
  conj1,
  conj2,
  alesker,
  decomposition,
};

enum class BodyClass { antiblocking, general };
enum class OutputFormat { json, csv };

// Verifier-id spelling used on the command line and in serialized output.
std::string target_id(SearchTarget target);
bool parse_target(const std::string& id, SearchTarget& out);
std::string body_class_id(BodyClass body_class);
bool parse_body_class(const std::string& id, BodyClass& out);

struct SearchConfig {
  SearchTarget target = SearchTarget::conj2;
  BodyClass body_class = BodyClass::antiblocking;
  int n = 2;
  int p = 1;
  std::vector<int> k_spec;  // target-dependent: k, kvec, or partition
  int trials = 100;
  std::uint64_t seed = 0;
  int grid_q = 4;           // coordinate denominators drawn from {1/q,...,q/q}
  int max_generators = 4;
  OutputFormat out_format = OutputFormat::json;
};

// Hull of up to max_generators down-closed boxes with grid-rational corners.
VPolytope random_staircase(SplitMix64& rng, int n, int grid_q, int max_generators);

// Staircase generator, except one trial in eight draws an axis simplex so
// equality cases appear in every corpus.
VPolytope random_antiblocking_body(SplitMix64& rng, int n, int grid_q, int max_generators);

// Hull of n+1..n+max_generators points on the symmetric grid [-1,1]/q;
// may be degenerate (verifiers handle empty interior).
VPolytope random_polytope(SplitMix64& rng, int n, int grid_q, int max_generators);

struct SearchSummary {
  Rational min_gap;
  int violations = 0;
  int equalities = 0;
  int trials = 0;
};

struct SearchResult {
  std::vector<VerificationReport> reports;  // gap ascending, ties by trial
  SearchSummary summary;
};

// Runs config.trials independent seeded trials of the target verifier on
// freshly generated bodies. Reports come back sorted by gap ascending
// (worst first), ties broken by trial index, so output is deterministic for
// a fixed seed + config.
SearchResult search_counterexamples(const SearchConfig& config);

SearchSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace mixvol
