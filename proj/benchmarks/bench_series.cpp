#include <benchmark/benchmark.h>

#include <random>

#include "ahseries/bivar_series.hpp"
#include "ahseries/named_series.hpp"
#include "ahseries/verify.hpp"

using namespace ahseries;

namespace {

FpSeries random_series(std::uint32_t p, int n) {
  std::mt19937_64 rng(42);
  Fp field(p);
  FpSeries f(field, n);
  std::uniform_int_distribution<std::int64_t> coeff(0, static_cast<std::int64_t>(p) - 1);
  for (int i = 0; i < n; ++i) f.set(i, field.from_int(coeff(rng)));
  return f;
}

void BM_SeriesMul(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FpSeries f = random_series(13, n);
  FpSeries g = random_series(13, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesMul)->Arg(256)->Arg(1024)->Arg(2048)->Complexity(benchmark::oNSquared);

void BM_SeriesInvert(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  FpSeries f = random_series(13, n);
  f.set(0, Fp(13).one());
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert(f));
  }
}
BENCHMARK(BM_SeriesInvert)->Arg(256)->Arg(1024);

void BM_ArtinHasseRational(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(artin_hasse_rational(3, n));
  }
}
BENCHMARK(BM_ArtinHasseRational)->Arg(256)->Arg(1024);

void BM_EpSeries(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ep_series(7, n));
  }
}
BENCHMARK(BM_EpSeries)->Arg(512);

void BM_SSeries(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(s_series(13, n));
  }
}
BENCHMARK(BM_SSeries)->Arg(512);

void BM_VerifyEq2(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  NamedSeriesSet set = NamedSeriesSet::build(5, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_eq2(set));
  }
}
BENCHMARK(BM_VerifyEq2)->Arg(256)->Arg(1024);

void BM_DefectSeries(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  FpSeries ep = ep_series(5, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(defect_series(ep, d));
  }
}
BENCHMARK(BM_DefectSeries)->Arg(40)->Arg(80);

void BM_LemmaReduction(benchmark::State& state) {
  std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_lemma_ss(p));
  }
}
BENCHMARK(BM_LemmaReduction)->Arg(11)->Arg(13);

} // namespace

BENCHMARK_MAIN();
