#include <benchmark/benchmark.h>

#include "bellstir/colour_graph.hpp"
#include "bellstir/constructions.hpp"
#include "bellstir/hamilton.hpp"
#include "bellstir/partition.hpp"

using namespace bellstir;

static void BM_EnumerateBellPath(benchmark::State& state) {
  const Graph g = path(static_cast<int>(state.range(0)));
  std::size_t members = 0;
  for (auto _ : state) {
    const PartitionFamily f = enumerate(g, 4, FamilyMode::kAtMost);
    members = f.size();
    benchmark::DoNotOptimize(members);
  }
  state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_EnumerateBellPath)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BuildStirling(benchmark::State& state) {
  const Graph g = path(static_cast<int>(state.range(0)));
  const auto strategy = state.range(1) ? EdgeStrategy::kBuckets : EdgeStrategy::kAllPairs;
  for (auto _ : state) {
    const ColourGraph cg = build(g, 4, ColourGraphKind::kStirling, strategy);
    benchmark::DoNotOptimize(cg.size());
  }
}
BENCHMARK(BM_BuildStirling)->ArgsProduct({{7, 8, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_BellNCycle(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bell_n_cycle(g).size());
}
BENCHMARK(BM_BellNCycle)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_B3TreeCycle(benchmark::State& state) {
  const Tree t(path(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(b3_tree_cycle(t).size());
}
BENCHMARK(BM_B3TreeCycle)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_SkTreeCycle(benchmark::State& state) {
  const Tree t(path(static_cast<int>(state.range(0))));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sk_tree_cycle(t, k).size());
}
BENCHMARK(BM_SkTreeCycle)->Args({7, 4})->Args({8, 4})->Args({8, 5})->Unit(benchmark::kMillisecond);

static void BM_OracleStirlingCycle(benchmark::State& state) {
  const ColourGraph cg = build(path(static_cast<int>(state.range(0))), 4, ColourGraphKind::kStirling);
  for (auto _ : state) benchmark::DoNotOptimize(find_hamilton_cycle(cg.skeleton).status);
}
BENCHMARK(BM_OracleStirlingCycle)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
