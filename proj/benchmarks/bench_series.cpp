#include <benchmark/benchmark.h>

#include "skeinym/param.hpp"
#include "skeinym/spine.hpp"
#include "skeinym/surface_ym.hpp"

using namespace skeinym;

static void BM_ClosedSeries(benchmark::State& state) {
  const Param p = Param::real(0.5);
  const ColoredSpine s = canonical_spine(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ym_closed(p, s, 1e-8));
  }
}
BENCHMARK(BM_ClosedSeries)->Arg(2)->Arg(3)->Arg(5);

static void BM_ColoredSeries(benchmark::State& state) {
  const Param p = Param::real(0.5);
  ColoredSpine s = canonical_spine(2);
  for (auto& c : s.edge_colors) c = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ym_closed(p, s, 1e-8));
  }
}
BENCHMARK(BM_ColoredSeries);

static void BM_RootEvaluation(benchmark::State& state) {
  const Param p = Param::root_of_unity(static_cast<int>(state.range(0)));
  const ColoredSpine s = canonical_spine(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ym_root(p, s));
  }
}
BENCHMARK(BM_RootEvaluation)->Arg(5)->Arg(12);

static void BM_WittenSeries(benchmark::State& state) {
  const ColoredSpine s = canonical_spine(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ym_witten(s, 0.1, 1e-9));
  }
}
BENCHMARK(BM_WittenSeries);

BENCHMARK_MAIN();
