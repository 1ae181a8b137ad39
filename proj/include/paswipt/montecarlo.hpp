#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "paswipt/config.hpp"
#include "paswipt/counter_rng.hpp"
#include "paswipt/geometry.hpp"

namespace paswipt {

enum class Metric { energy_lm, energy_nlm, rate };
std::string_view to_string(Metric m);  // "energy-lm", "energy-nlm", "rate"
Metric parse_metric(std::string_view name);

struct EstimateWithCI {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n)
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 0;  // 0: OpenMP default
};

/// Samples are accumulated in fixed chunks of this many indices; chunk
/// moments are then merged by a fixed binary tree over chunk index. The
/// layout never depends on the worker count.
inline constexpr std::uint64_t kMcChunkSize = 4096;

/// User i of the stream: x = d_x u_{2i}, y = d_y u_{2i+1}.
UePosition sample_ue(const RegionGeometry& g, const CounterRng& rng, std::uint64_t i);
std::vector<UePosition> sample_ue_stream(const RegionGeometry& g, std::uint64_t seed, std::uint64_t n);

/// Per-user value of a metric given the optimal squared distance:
///   energy-lm   alpha beta eta P_t / L
///   energy-nlm  alpha Phi(beta P_t / L)
///   rate        (1 - alpha beta) log2(1 + mu P_t / (sigma^2 L))
class MetricKernel {
 public:
  MetricKernel(Metric metric, const Config& config);
  double operator()(SquaredDistance l) const;

 private:
  Metric metric_;
  Config config_;
  double scale_;
};

/// Parallel estimator (OpenMP over chunks). Bitwise identical to
/// estimate_serial for any worker count.
/// Throws std::invalid_argument when samples < 2.
EstimateWithCI estimate(Metric metric, const DeploymentScheme& scheme, const Config& config,
                        const McOptions& opts);

/// Single-threaded reference with the same chunking and reduction order.
EstimateWithCI estimate_serial(Metric metric, const DeploymentScheme& scheme, const Config& config,
                               std::uint64_t samples, std::uint64_t seed);

}  // namespace paswipt
