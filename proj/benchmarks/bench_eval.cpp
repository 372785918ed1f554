#include <benchmark/benchmark.h>

#include "unitysum/angles.hpp"

namespace us = unitysum;

static void BM_EvalMagnitude(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const us::RootConfig c(47240, {0, 9414, 18875, 28336, 37750});
  for (auto _ : state) benchmark::DoNotOptimize(us::eval_magnitude(c, digits));
}
BENCHMARK(BM_EvalMagnitude)->Arg(15)->Arg(30)->Arg(60);

static void BM_CosSinTurns(benchmark::State& state) {
  std::int64_t a = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(us::cos_sin_turns(a, 221000, 128));
    a = (a * 7919 + 13) % 221000;
  }
}
BENCHMARK(BM_CosSinTurns);

static void BM_RootTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(us::RootTable(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RootTable)->Arg(1000)->Arg(100000);
