#include "slopes/classical.hpp"
#include "slopes/matrix.hpp"
#include "slopes/spectral.hpp"

#include <benchmark/benchmark.h>

using namespace slopes;

namespace {

RationalMatrix s_matrix(long n) {
  STable t = s_table(std::max<long>(2, n), std::max<long>(2, n));
  RationalMatrix m(n);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) m.at(i - 1, j - 1) = Rat(t.at(i, j));
  return m;
}

}  // namespace

static void BM_CharpolyBerkowitz(benchmark::State& state) {
  RationalMatrix m = s_matrix(state.range(0));
  for (auto _ : state) {
    auto c = reversed_charpoly_berkowitz(m);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CharpolyBerkowitz)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

static void BM_CharpolyModular(benchmark::State& state) {
  RationalMatrix m = s_matrix(state.range(0));
  for (auto _ : state) {
    auto c = reversed_charpoly_modular(m);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CharpolyModular)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_VerifyClassical(benchmark::State& state) {
  long k = state.range(0);
  for (auto _ : state) {
    auto rep = verify_classical_polygon(k);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyClassical)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
