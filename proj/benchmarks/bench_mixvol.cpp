// Micro benchmarks for the hot paths: hulls, volumes, mixed volumes, and a
// full inequality check. Bodies are fixed and seeded so runs are comparable.

#include <benchmark/benchmark.h>

#include "mixvol/constructions.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/search.hpp"
#include "mixvol/verifiers.hpp"

#include <utility>
#include <vector>

namespace {

using namespace mixvol;

std::vector<Point> staircase_points(int n, int generators) {
  SplitMix64 rng(1234);
  std::vector<Point> pts = {Point(static_cast<std::size_t>(n), Rational(0))};
  for (int g = 0; g < generators; ++g) {
    Point base(static_cast<std::size_t>(n));
    for (auto& c : base) c = make_rational(1 + static_cast<std::int64_t>(rng.below(8)), 8);
    // All coordinate zeroings of the generator.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Point p = base;
      for (int i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) p[static_cast<std::size_t>(i)] = 0;
      }
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

void BM_Hull3D(benchmark::State& state) {
  const std::vector<Point> pts = staircase_points(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull(3, pts));
  }
}
BENCHMARK(BM_Hull3D)->Arg(4)->Arg(8);

void BM_Hull4D(benchmark::State& state) {
  const std::vector<Point> pts = staircase_points(4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull(4, pts));
  }
}
BENCHMARK(BM_Hull4D)->Arg(4);

void BM_Volume4D(benchmark::State& state) {
  const VPolytope tri = axis_simplex({Rational(1), Rational(1)});
  const VPolytope body = higher_difference_body(tri, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(volume(body));
  }
}
BENCHMARK(BM_Volume4D);

void BM_MixedVolume22(benchmark::State& state) {
  SplitMix64 rng(99);
  const VPolytope k = random_staircase(rng, 2, 4, 4);
  for (auto _ : state) {
    // Fresh cache each round: measures the uncached polarization cost.
    VolumeCache cache;
    benchmark::DoNotOptimize(check_conjecture2(k, 2, {1, 1}, &cache,
                                               /*with_witnesses=*/false));
  }
}
BENCHMARK(BM_MixedVolume22);

void BM_DifferenceBodyCheck(benchmark::State& state) {
  const VPolytope square =
      hull(2, {Point{Rational(0), Rational(0)}, Point{Rational(1), Rational(0)},
               Point{Rational(0), Rational(1)}, Point{Rational(1), Rational(1)}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_rogers_shephard(square));
  }
}
BENCHMARK(BM_DifferenceBodyCheck);

}  // namespace

BENCHMARK_MAIN();
