#include <benchmark/benchmark.h>

#include "padicig/roots.hpp"
#include "padicig/sample.hpp"

using namespace padicig;

static void BM_SampledP1(benchmark::State& state) {
  const RandomPolyModel model{PolyBasis::Monomial, static_cast<long>(state.range(0)), 1, 3};
  std::uint64_t i = 0;
  for (auto _ : state) {
    const DigitStream s(3, 1, i++);
    benchmark::DoNotOptimize(adaptive_count([&](long m) { return count_roots_p1(sample_poly(model, s, m)); }).count);
  }
}
BENCHMARK(BM_SampledP1)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

static void BM_MahlerZp(benchmark::State& state) {
  const RandomPolyModel model{PolyBasis::Mahler, static_cast<long>(state.range(0)), 1, 3};
  std::uint64_t i = 0;
  for (auto _ : state) {
    const DigitStream s(3, 2, i++);
    benchmark::DoNotOptimize(adaptive_count([&](long m) { return count_roots_zp(sample_poly(model, s, m)); }).count);
  }
}
BENCHMARK(BM_MahlerZp)->Arg(3)->Arg(7)->Arg(12);

static void BM_ExactClusteredRoots(benchmark::State& state) {
  // (t - 1)(t - 1 - 3^k)(t + 2): roots agree to k digits.
  const long k = state.range(0);
  const Integer a = 1 + ipow(3, static_cast<unsigned long>(k));
  const std::vector<Integer> f{2 * a, -a - 2, 1 - a, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_roots_zp(UnivariatePoly::exact(Prime(3), f)).count);
  }
}
BENCHMARK(BM_ExactClusteredRoots)->Arg(2)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
