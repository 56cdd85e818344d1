#include <benchmark/benchmark.h>

#include "oglab/closed_form.hpp"
#include "oglab/labeling.hpp"

using namespace oglab;

static void BM_VerifyTheorem1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = build_theorem1(n, 3);
  const auto l = label_theorem1(n, 3, {.apply_repairs = true}).labeling;
  for (auto _ : state) benchmark::DoNotOptimize(verify_odd_graceful(g, l));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.q()));
}
BENCHMARK(BM_VerifyTheorem1)->RangeMultiplier(4)->Range(4, 256);

static void BM_LabelTheorem3(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(label_theorem3(k, 2));
}
BENCHMARK(BM_LabelTheorem3)->RangeMultiplier(4)->Range(1, 256);

static void BM_BuildTheorem2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_theorem2(n, 2));
}
BENCHMARK(BM_BuildTheorem2)->RangeMultiplier(4)->Range(2, 128);
