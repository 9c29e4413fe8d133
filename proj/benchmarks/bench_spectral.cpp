#include "slopes/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace slopes;

static void BM_STable(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    STable t = s_table(n, n);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_STable)->Arg(32)->Arg(64)->Arg(128);

static void BM_TruncatedCharSeries(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    auto c = truncated_char_series(n);
    benchmark::DoNotOptimize(c);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_TruncatedCharSeries)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_SpectralSlopes(benchmark::State& state) {
  long n = state.range(0);
  for (auto _ : state) {
    auto s = spectral_slopes(n);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SpectralSlopes)->Arg(4)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
