#include "hkt/cusp_dim.hpp"
#include "hkt/lattice.hpp"
#include "hkt/quadratic_module.hpp"
#include "hkt/weil.hpp"

#include <benchmark/benchmark.h>

using namespace hkt;

static void BM_SignatureK3n(benchmark::State& state) {
  auto l = k3n_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(signature(l));
}
BENCHMARK(BM_SignatureK3n)->Arg(2)->Arg(5)->Arg(50);

static void BM_DiscriminantModule(benchmark::State& state) {
  auto l = direct_sum(k3n_lattice(static_cast<int>(state.range(0))), rank_one(-6));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_module(l));
}
BENCHMARK(BM_DiscriminantModule)->Arg(2)->Arg(7)->Arg(31);

static void BM_MilgramEnumerate(benchmark::State& state) {
  auto m = discriminant_module(direct_sum(rank_one(-2 * state.range(0)), rank_one(2 * state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(milgram(m, 200, GaussSumMethod::Enumerate));
}
BENCHMARK(BM_MilgramEnumerate)->RangeMultiplier(4)->Range(4, 256);

static void BM_MilgramJordan(benchmark::State& state) {
  auto l = direct_sum(rank_one(-2 * state.range(0)), rank_one(2 * state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(milgram(l, 200, GaussSumMethod::Jordan));
}
BENCHMARK(BM_MilgramJordan)->RangeMultiplier(4)->Range(4, 256);

static void BM_WeilRelations(benchmark::State& state) {
  auto m = discriminant_module(rank_one(-2 * state.range(0)));
  for (auto _ : state) {
    auto w = weil_matrices(m, false);
    benchmark::DoNotOptimize(check_weil_relations(w));
  }
}
BENCHMARK(BM_WeilRelations)->Arg(3)->Arg(12)->Arg(24);

static void BM_CuspDimension(benchmark::State& state) {
  auto m = discriminant_module(polarized_k3_lattice(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dim_cusp_forms(m, make_rational(21, 2), true));
}
BENCHMARK(BM_CuspDimension)->Arg(2)->Arg(10)->Arg(40);

BENCHMARK_MAIN();
