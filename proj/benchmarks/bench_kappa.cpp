#include "hkt/chern.hpp"
#include "hkt/kappa.hpp"

#include <benchmark/benchmark.h>

using namespace hkt;

static void BM_ToddSeries(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(todd_series(rank + 2, rank));
}
BENCHMARK(BM_ToddSeries)->DenseRange(2, 8, 2);

static void BM_GrrRelations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GrrOptions opts{{true, true, false}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(grr_relations(n, 2, opts));
}
BENCHMARK(BM_GrrRelations)->DenseRange(1, 4);

static void BM_ReduceTwoDimensional(benchmark::State& state) {
  PushforwardOptions euler{true, true, false};
  auto rel = grr_relations(2, static_cast<int>(state.range(0)), GrrOptions{euler, {}});
  auto target = kappa_symbol({}, {2, 2, 0, 0}, 2, euler);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_lambda(target, rel));
}
BENCHMARK(BM_ReduceTwoDimensional)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
