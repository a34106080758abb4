#include <benchmark/benchmark.h>

#include "skeinym/param.hpp"
#include "skeinym/recoupling.hpp"

using namespace skeinym;

static void BM_QintGrowth(benchmark::State& state) {
  const Param p = Param::real(0.5);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    QuantumContext ctx(p);
    benchmark::DoNotOptimize(ctx.qint(n));
  }
}
BENCHMARK(BM_QintGrowth)->Arg(128)->Arg(1024)->Arg(8192);

static void BM_Theta(benchmark::State& state) {
  const Param p = Param::real(0.5);
  const int a = static_cast<int>(state.range(0));
  context_for(p).qfact(3 * a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta(p, a, a, a));
  }
}
BENCHMARK(BM_Theta)->Arg(4)->Arg(16)->Arg(64);

static void BM_Tet(benchmark::State& state) {
  const Param p = Param::real(0.5);
  const int a = static_cast<int>(state.range(0));
  context_for(p).qfact(4 * a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tet(p, a, a, a, a, a, a));
  }
}
BENCHMARK(BM_Tet)->Arg(4)->Arg(16)->Arg(64);

static void BM_Sixj(benchmark::State& state) {
  const Param p = Param::real(0.5);
  const int a = static_cast<int>(state.range(0));
  context_for(p).qfact(4 * a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sixj(p, a, a, a, a, a, a));
  }
}
BENCHMARK(BM_Sixj)->Arg(4)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
