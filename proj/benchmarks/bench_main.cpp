#include <benchmark/benchmark.h>

#include "mingenus/commands.hpp"
#include "mingenus/evaluator.hpp"
#include "mingenus/fixtures.hpp"
#include "mingenus/profile.hpp"
#include "mingenus/reduction.hpp"

using namespace mingenus;

static void BM_ReduceRank3(benchmark::State& state) {
  const Int a = state.range(0);
  const HomologyClass c{a, a - 1, a / 2};
  for (auto _ : state) benchmark::DoNotOptimize(reduce(c));
}
BENCHMARK(BM_ReduceRank3)->Arg(10)->Arg(1000)->Arg(1000000);

static void BM_ReduceRank4(benchmark::State& state) {
  const Int a = state.range(0);
  const HomologyClass c{a, a - 1, a / 2, a / 3};
  for (auto _ : state) benchmark::DoNotOptimize(reduce(c));
}
BENCHMARK(BM_ReduceRank4)->Arg(10)->Arg(1000)->Arg(1000000);

static void BM_OrbitBfs(benchmark::State& state) {
  const auto m = fixtures::cp2_2cp2bar();
  const HomologyClass c{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(orbit_bfs(m, c, state.range(0)));
}
BENCHMARK(BM_OrbitBfs)->Arg(5)->Arg(20)->Arg(50);

static void BM_ProfileK3(benchmark::State& state) {
  const auto m = fixtures::k3();
  ProfileOptions o;
  o.norm_bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(profile_search(m, o));
}
BENCHMARK(BM_ProfileK3)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_TableCp2x2(benchmark::State& state) {
  const auto m = fixtures::cp2_2cp2bar();
  for (auto _ : state) benchmark::DoNotOptimize(cmd_table(m, state.range(0)));
}
BENCHMARK(BM_TableCp2x2)->Arg(3)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
