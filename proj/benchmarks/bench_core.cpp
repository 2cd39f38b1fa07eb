#include <vector>

#include <benchmark/benchmark.h>

#include "cvqkd/info_rates.hpp"
#include "cvqkd/sampling.hpp"
#include "cvqkd/security.hpp"

using namespace cvqkd;

namespace {

ProtocolConfig bench_config(Direction dir) {
  ProtocolConfig cfg;
  cfg.prep = {0.5, 1.0, 1.0};
  cfg.ch = {0.1, 0.02};
  cfg.beta = 0.9;
  cfg.direction = dir;
  return cfg;
}

void BM_SymplecticEigenvalues(benchmark::State& state) {
  const auto gamma = trusted_state({0.5, 1.0, 1.0}, {0.1, 0.02});
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_eigenvalues(gamma));
}
BENCHMARK(BM_SymplecticEigenvalues);

void BM_KeyRateReverse(benchmark::State& state) {
  const auto cfg = bench_config(Direction::reverse);
  for (auto _ : state) benchmark::DoNotOptimize(secret_key_rate(cfg));
}
BENCHMARK(BM_KeyRateReverse);

void BM_KeyRateDirect(benchmark::State& state) {
  const auto cfg = bench_config(Direction::direct);
  for (auto _ : state) benchmark::DoNotOptimize(secret_key_rate(cfg));
}
BENCHMARK(BM_KeyRateDirect);

void BM_OptimizeDisplacement(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_displacement(0.5, {0.1, 0.02}, 0.9, Direction::reverse));
  }
}
BENCHMARK(BM_OptimizeDisplacement)->Unit(benchmark::kMillisecond);

void BM_MaxTolerableNoise(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_tolerable_noise(0.5, 0.1, 0.6, Direction::reverse));
  }
}
BENCHMARK(BM_MaxTolerableNoise)->Unit(benchmark::kMillisecond);

void BM_SimulatePm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_pm({0.5, 1.0, 1.0}, {0.1, 0.1}, n, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulatePm)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
