#include "hkt/lattice.hpp"
#include "hkt/nl_cycles.hpp"

#include <benchmark/benchmark.h>

using namespace hkt;

static void BM_Overlattices(benchmark::State& state) {
  auto s = direct_sum(rank_one(2 * state.range(0)), rank_one(-2 * state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(overlattices(s));
}
BENCHMARK(BM_Overlattices)->Arg(2)->Arg(6)->Arg(12);

static void BM_NlFamily(benchmark::State& state) {
  const Integer bound(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nl_family(2, bound));
}
BENCHMARK(BM_NlFamily)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_BasisChange(benchmark::State& state) {
  auto fam = nl_family(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(nl_basis_change(fam));
}
BENCHMARK(BM_BasisChange)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_BasisChangeThreads(benchmark::State& state) {
  auto fam = nl_family(2, 64);
  const unsigned threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nl_basis_change(fam, threads));
}
BENCHMARK(BM_BasisChangeThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
