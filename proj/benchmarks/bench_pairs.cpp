#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "unitysum/pair_completion.hpp"

namespace us = unitysum;

namespace {

std::vector<std::complex<double>> points(std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> r(0.0, 3.0);
  std::uniform_real_distribution<double> t(0.0, 6.283185307179586);
  std::vector<std::complex<double>> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::polar(r(rng), t(rng)));
  return out;
}

}  // namespace

static void BM_CompleteBest(benchmark::State& state) {
  const us::PairCompleter pc(state.range(0));
  const auto ys = points(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pc.best(ys[i++ % ys.size()], 8));
  }
}
BENCHMARK(BM_CompleteBest)->Arg(100)->Arg(10000)->Arg(200000);

// Baseline the scan is meant to beat.
static void BM_CompleteOracle(benchmark::State& state) {
  const auto ys = points(16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(us::complete_pair_oracle(ys[i++ % ys.size()], state.range(0), 8));
  }
}
BENCHMARK(BM_CompleteOracle)->Arg(100)->Arg(1000);
