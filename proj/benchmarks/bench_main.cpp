#include <benchmark/benchmark.h>

#include "orbitvar/algebra/matrix.hpp"
#include "orbitvar/ideals/chart.hpp"
#include "orbitvar/ideals/determinantal.hpp"
#include "orbitvar/lie/builtins.hpp"
#include "orbitvar/orbit/fixed_points.hpp"
#include "orbitvar/util/random.hpp"

using namespace orbitvar;

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  util::Rng rng(1);
  alg::QMatrix m(n, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n + 2; ++j) m(i, j) = alg::Rational(rng.uniform_int(-9, 9));
  for (auto _ : state) benchmark::DoNotOptimize(alg::rref(m));
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16);

static void BM_DeterminantalDimension(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    // fresh ideal each round so the cached basis is not reused
    ideals::Ideal p = ideals::determinantal_P(s);
    benchmark::DoNotOptimize(ideals::hilbert_dimension(p));
  }
}
BENCHMARK(BM_DeterminantalDimension)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_TorusFixedPoints(benchmark::State& state) {
  auto alg = lie::builtin(state.range(0) == 2 ? "borel-nilradical-A2" : "borel-nilradical-A3");
  for (auto _ : state) benchmark::DoNotOptimize(orbit::torus_fixed_points(alg));
}
BENCHMARK(BM_TorusFixedPoints)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ChartA2(benchmark::State& state) {
  auto alg = lie::builtin("borel-nilradical-A2");
  auto points = orbit::group_fixed_points(alg);
  for (auto _ : state) {
    for (const auto& p : points) {
      auto chart = ideals::chart_ideal(alg, p.subspace);
      benchmark::DoNotOptimize(ideals::nilcone_dimension(chart));
    }
  }
}
BENCHMARK(BM_ChartA2)->Unit(benchmark::kMillisecond);

static void BM_DeterminantalSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ideals::determinantal_suite(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DeterminantalSuite)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
