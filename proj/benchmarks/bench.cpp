#include <benchmark/benchmark.h>

#include <surdcf/convergents.hpp>
#include <surdcf/poly_families.hpp>
#include <surdcf/roots.hpp>
#include <surdcf/surd.hpp>
#include <surdcf/theorems.hpp>

using namespace surdcf;

// Expansion of sqrt(D); period length grows roughly like sqrt(D).
static void BM_ExpandSqrt(benchmark::State& state) {
  const QuadraticSurd s(0, 1, Integer(static_cast<long>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(s));
  }
}
BENCHMARK(BM_ExpandSqrt)->Arg(94)->Arg(991)->Arg(100003);

static void BM_PeriodicValue(benchmark::State& state) {
  PeriodicCF cf;
  cf.preperiod = {3, 1, 4};
  for (int i = 0; i < state.range(0); ++i) cf.period.emplace_back(1 + (i * 7) % 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(periodic_value(cf));
  }
}
BENCHMARK(BM_PeriodicValue)->Arg(4)->Arg(32)->Arg(256);

static void BM_VerifyAlpha(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int N = 1; N <= 10; ++N) {
      benchmark::DoNotOptimize(verify(TheoremCase::alpha(n, N)));
    }
  }
}
BENCHMARK(BM_VerifyAlpha)->Arg(5)->Arg(20);

static void BM_VerifyGPoly(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(TheoremCase::gpoly(k, 3, 5)));
  }
}
BENCHMARK(BM_VerifyGPoly)->Arg(2)->Arg(12);

static void BM_NumericRootsShifted(benchmark::State& state) {
  const IntPolynomial p = shifted_Q(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_roots(p));
  }
}
BENCHMARK(BM_NumericRootsShifted)->Arg(5)->Arg(20);

static void BM_LocusQuartic(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(locus_quartic_k4(m));
  }
}
BENCHMARK(BM_LocusQuartic)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
