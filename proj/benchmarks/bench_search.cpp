#include <benchmark/benchmark.h>

#include "oglab/closed_form.hpp"
#include "oglab/search.hpp"

using namespace oglab;

static void BM_SearchEvenCycle(benchmark::State& state) {
  const auto g = cycle_graph(static_cast<int>(state.range(0)));
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = find_odd_graceful(g).stats.nodes_expanded;
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchEvenCycle)->DenseRange(4, 16, 4);

// args: n, m, reachability prune on/off
static void BM_SearchLadder(benchmark::State& state) {
  const auto g = build_theorem1(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  SearchConfig cfg{.node_budget = 2'000'000, .use_reachability_prune = state.range(2) != 0};
  std::uint64_t nodes = 0;
  for (auto _ : state) nodes = find_odd_graceful(g, cfg).stats.nodes_expanded;
  state.counters["nodes"] = static_cast<double>(nodes);
  state.counters["ns/node"] = benchmark::Counter(static_cast<double>(nodes) * state.iterations(),
                                                 benchmark::Counter::kIsRate | benchmark::Counter::kInvert);
}
BENCHMARK(BM_SearchLadder)->Args({2, 1, 1})->Args({2, 1, 0})->Args({3, 1, 1})->Args({3, 2, 1})->Args({5, 1, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveOracle(benchmark::State& state) {
  const auto g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_oracle(g));
}
BENCHMARK(BM_ExhaustiveOracle)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
