#include <benchmark/benchmark.h>

#include "unitysum/search.hpp"

namespace us = unitysum;

static void BM_ExactMin5(benchmark::State& state) {
  us::SearchOptions opts;
  opts.prune_enabled = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(us::exact_min_5(state.range(0), opts));
}
BENCHMARK(BM_ExactMin5)
    ->ArgsProduct({{500, 5000, 20000}, {0, 1}})
    ->ArgNames({"n", "prune"})
    ->Unit(benchmark::kMillisecond);

static void BM_ExactMinNaive5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(us::exact_min_naive(5, state.range(0)));
}
BENCHMARK(BM_ExactMinNaive5)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_ExactMinMitm6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(us::exact_min_mitm(6, state.range(0)));
}
BENCHMARK(BM_ExactMinMitm6)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
