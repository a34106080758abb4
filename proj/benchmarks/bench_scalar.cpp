#include <benchmark/benchmark.h>

#include "skeinym/scaled_scalar.hpp"

using skeinym::Complex;
using skeinym::ScaledScalar;

static void BM_Mul(benchmark::State& state) {
  const ScaledScalar a = ScaledScalar::from_parts(Complex(0.7, 0.3), 512);
  ScaledScalar x(1.0);
  for (auto _ : state) {
    x = x * a;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Mul);

static void BM_Add(benchmark::State& state) {
  const ScaledScalar a = ScaledScalar::from_parts(Complex(0.7, 0.3), 40);
  const ScaledScalar b = ScaledScalar::from_parts(Complex(-0.6, 0.2), 12);
  for (auto _ : state) {
    ScaledScalar s = a + b;
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Add);

static void BM_PowInt(benchmark::State& state) {
  const ScaledScalar base(1.5);
  const std::int64_t k = state.range(0);
  for (auto _ : state) {
    ScaledScalar p = pow_int(base, k);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PowInt)->Arg(64)->Arg(4096)->Arg(1 << 20);

BENCHMARK_MAIN();
