// Serial reference vs OpenMP estimator on the same (seed, n, config).

#include <benchmark/benchmark.h>

#include "paswipt/montecarlo.hpp"

namespace {

paswipt::Config bench_config() {
  paswipt::ConfigInput in;
  in.transmit_power_w = 0.3;
  return paswipt::validate_or_throw(in);
}

void BM_Serial(benchmark::State& state) {
  const auto c = bench_config();
  const paswipt::DeploymentScheme d{paswipt::Scheme::diagonal, c.geometry};
  const auto metric = static_cast<paswipt::Metric>(state.range(0));
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(paswipt::estimate_serial(metric, d, c, n, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_OpenMP(benchmark::State& state) {
  const auto c = bench_config();
  const paswipt::DeploymentScheme d{paswipt::Scheme::diagonal, c.geometry};
  const auto metric = static_cast<paswipt::Metric>(state.range(0));
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(1));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(paswipt::estimate(metric, d, c, {n, 1, workers}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

constexpr int kMetrics[] = {static_cast<int>(paswipt::Metric::energy_lm), static_cast<int>(paswipt::Metric::energy_nlm),
                            static_cast<int>(paswipt::Metric::rate)};

void serial_args(benchmark::internal::Benchmark* b) {
  for (int m : kMetrics) b->Args({m, 1 << 20});
}

void omp_args(benchmark::internal::Benchmark* b) {
  for (int m : kMetrics)
    for (int w : {1, 2, 4, 8}) b->Args({m, 1 << 20, w});
}

}  // namespace

BENCHMARK(BM_Serial)->Apply(serial_args)->ArgNames({"metric", "n"})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OpenMP)->Apply(omp_args)->ArgNames({"metric", "n", "workers"})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
