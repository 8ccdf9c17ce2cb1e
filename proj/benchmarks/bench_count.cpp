#include <benchmark/benchmark.h>

#include "padicig/count_vol.hpp"
#include "padicig/proj.hpp"

using namespace padicig;

static void BM_ConicCount(benchmark::State& state) {
  const AlgebraicSet conic = AlgebraicSet::parse(2, {"x0*x2 - x1^2"}, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_points_mod(conic, 3, state.range(0)).n_lo);
}
BENCHMARK(BM_ConicCount)->DenseRange(1, 5);

static void BM_CrossingLines(benchmark::State& state) {
  const AlgebraicSet two = AlgebraicSet::parse(2, {"x1*x2"}, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_points_mod(two, 3, state.range(0)).n_lo);
}
BENCHMARK(BM_CrossingLines)->DenseRange(1, 4);

static void BM_EnumerateProj(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_proj(3, 2, state.range(0)).size());
}
BENCHMARK(BM_EnumerateProj)->DenseRange(1, 4);

BENCHMARK_MAIN();
