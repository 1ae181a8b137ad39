#include <vector>

#include "montecarlo_detail.hpp"

namespace paswipt {

EstimateWithCI estimate_serial(Metric metric, const DeploymentScheme& scheme, const Config& config,
                               std::uint64_t samples, std::uint64_t seed) {
  detail::require_samples(samples);
  const MetricKernel kernel(metric, config);
  const CounterRng rng(seed);
  std::vector<detail::ChunkMoments> moments(detail::chunk_count(samples));
  for (std::uint64_t c = 0; c < moments.size(); ++c)
    moments[c] = detail::accumulate_chunk(kernel, scheme, rng, c, samples);
  return detail::finish(detail::tree_reduce(moments), seed);
}

}  // namespace paswipt
