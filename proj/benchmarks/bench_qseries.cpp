#include "slopes/series.hpp"

#include <benchmark/benchmark.h>

using namespace slopes;

static void BM_DeltaExpansion(benchmark::State& state) {
  long prec = state.range(0);
  for (auto _ : state) {
    QSeries d = delta_qexp(prec);
    benchmark::DoNotOptimize(d);
  }
  state.SetComplexityN(prec);
}
BENCHMARK(BM_DeltaExpansion)->RangeMultiplier(2)->Range(50, 400)->Complexity();

static void BM_SeriesMultiply(benchmark::State& state) {
  long prec = state.range(0);
  QSeries f = f_qexp(prec);
  QSeries d = delta_qexp(prec);
  for (auto _ : state) {
    QSeries p = f * d;
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(prec);
}
BENCHMARK(BM_SeriesMultiply)->RangeMultiplier(2)->Range(50, 400)->Complexity();

static void BM_MillerBasis(benchmark::State& state) {
  long k = state.range(0);
  long prec = 2 * dim_cusp_forms(k) + 1;
  for (auto _ : state) {
    auto basis = miller_basis(k, prec);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_MillerBasis)->Arg(48)->Arg(96)->Arg(192)->Arg(384);
