#include <benchmark/benchmark.h>

#include "rankclass/rankclass.hpp"

using namespace rankclass;

static void BM_LrExpand(benchmark::State& state) {
  const Partition mu({4, 3, 2, 1}), nu({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(lr_expand(mu, nu));
}
BENCHMARK(BM_LrExpand);

static void BM_Stanley(benchmark::State& state) {
  const auto all = all_permutations(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stanley(all[i]));
    i = (i + 1) % all.size();
  }
}
BENCHMARK(BM_Stanley)->DenseRange(4, 6);

static void BM_AffineStanley(benchmark::State& state) {
  const AffinePermutation f = affine_of_rank_set(RankSet({{1, 3}, {3, 6}, {4, 5}}, 6));
  for (auto _ : state) benchmark::DoNotOptimize(affine_stanley(f));
}
BENCHMARK(BM_AffineStanley);

static void BM_RankVarietyClass(benchmark::State& state) {
  const auto all = all_rank_sets(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const RankSet& m : all) benchmark::DoNotOptimize(rank_variety_class(m));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * all.size()));
}
BENCHMARK(BM_RankVarietyClass)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ClassDegree(benchmark::State& state) {
  SchubertClass x = SchubertClass::unit(4, 8);
  for (int i = 0; i < 4; ++i) x = class_product(x, SchubertClass::basis(4, 8, Partition({1})));
  for (auto _ : state) benchmark::DoNotOptimize(class_degree(x));
}
BENCHMARK(BM_ClassDegree);

static void BM_SpechtBruteforce(benchmark::State& state) {
  std::vector<Cell> cells;
  for (int i = 1; i <= state.range(0); ++i) cells.push_back({i, i});
  const Diagram d(cells);
  for (auto _ : state) benchmark::DoNotOptimize(specht_bruteforce(d));
}
BENCHMARK(BM_SpechtBruteforce)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Replay(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(replay_counterexample());
}
BENCHMARK(BM_Replay)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
