#include <array>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "montecarlo_detail.hpp"
#include "paswipt/energy.hpp"

namespace paswipt {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::energy_lm: return "energy-lm";
    case Metric::energy_nlm: return "energy-nlm";
    case Metric::rate: return "rate";
  }
  return "?";
}

Metric parse_metric(std::string_view name) {
  if (name == "energy-lm") return Metric::energy_lm;
  if (name == "energy-nlm") return Metric::energy_nlm;
  if (name == "rate") return Metric::rate;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

UePosition sample_ue(const RegionGeometry& g, const CounterRng& rng, std::uint64_t i) {
  return {g.d_x_m * rng.uniform(2 * i), g.d_y_m * rng.uniform(2 * i + 1)};
}

std::vector<UePosition> sample_ue_stream(const RegionGeometry& g, std::uint64_t seed, std::uint64_t n) {
  const CounterRng rng(seed);
  std::vector<UePosition> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(sample_ue(g, rng, i));
  return out;
}

MetricKernel::MetricKernel(Metric metric, const Config& config) : metric_(metric), config_(config) {
  const auto& p = config.protocol;
  const double pt = config.system.transmit_power_w;
  switch (metric) {
    case Metric::energy_lm: scale_ = p.alpha * p.beta * config.linear.eta * pt; break;
    case Metric::energy_nlm: scale_ = p.beta * pt; break;
    case Metric::rate: scale_ = config.system.mu_snr_m2(); break;
  }
}

double MetricKernel::operator()(SquaredDistance l) const {
  const double d2 = l.value();
  switch (metric_) {
    case Metric::energy_lm: return scale_ / d2;
    case Metric::energy_nlm:
      return config_.protocol.alpha * logistic_harvest(config_.logistic, scale_ / d2);
    case Metric::rate:
      return config_.protocol.decoding_fraction() * std::log1p(scale_ / d2) / std::numbers::ln2;
  }
  return 0.0;
}

namespace detail {

void require_samples(std::uint64_t samples) {
  if (samples < 2) throw std::invalid_argument("Monte-Carlo estimate needs at least 2 samples");
}

std::uint64_t chunk_count(std::uint64_t samples) {
  return (samples + kMcChunkSize - 1) / kMcChunkSize;
}

ChunkMoments accumulate_chunk(const MetricKernel& kernel, const DeploymentScheme& scheme,
                              const CounterRng& rng, std::uint64_t chunk, std::uint64_t samples) {
  const std::uint64_t begin = chunk * kMcChunkSize;
  const std::uint64_t end = std::min(samples, begin + kMcChunkSize);
  std::array<double, kMcChunkSize> values;

  double sum = 0.0;
  for (std::uint64_t i = begin; i < end; ++i) {
    const UePosition ue = sample_ue(scheme.geometry, rng, i);
    assert(inside_region(scheme.geometry, ue));
    const double v = kernel(optimal_squared_distance(scheme, ue));
    values[i - begin] = v;
    sum += v;
  }
  ChunkMoments m;
  m.n = end - begin;
  m.mean = sum / static_cast<double>(m.n);
  for (std::uint64_t k = 0; k < m.n; ++k) {
    const double d = values[k] - m.mean;
    m.m2 += d * d;
  }
  return m;
}

ChunkMoments merge(const ChunkMoments& a, const ChunkMoments& b) {
  if (a.n == 0) return b;
  if (b.n == 0) return a;
  const double na = static_cast<double>(a.n);
  const double nb = static_cast<double>(b.n);
  const double n = na + nb;
  const double delta = b.mean - a.mean;
  ChunkMoments out;
  out.n = a.n + b.n;
  out.mean = a.mean + delta * (nb / n);
  out.m2 = a.m2 + b.m2 + delta * delta * (na * nb / n);
  return out;
}

ChunkMoments tree_reduce(std::span<const ChunkMoments> chunks) {
  if (chunks.empty()) return {};
  if (chunks.size() == 1) return chunks.front();
  const std::size_t mid = chunks.size() / 2;
  return merge(tree_reduce(chunks.first(mid)), tree_reduce(chunks.subspan(mid)));
}

EstimateWithCI finish(const ChunkMoments& total, std::uint64_t seed) {
  const double n = static_cast<double>(total.n);
  const double variance = total.m2 / (n - 1.0);
  return {total.mean, std::sqrt(variance / n), total.n, seed};
}

}  // namespace detail
}  // namespace paswipt
