#include <cstdint>
#include <vector>

#include <omp.h>

#include "montecarlo_detail.hpp"

namespace paswipt {

EstimateWithCI estimate(Metric metric, const DeploymentScheme& scheme, const Config& config,
                        const McOptions& opts) {
  detail::require_samples(opts.samples);
  const MetricKernel kernel(metric, config);
  const CounterRng rng(opts.seed);
  const auto chunks = static_cast<std::int64_t>(detail::chunk_count(opts.samples));
  std::vector<detail::ChunkMoments> moments(static_cast<std::size_t>(chunks));
  const int workers = opts.workers > 0 ? opts.workers : omp_get_max_threads();

  // Each chunk writes only its own slot; the reduction runs afterwards in a
  // fixed order.
#pragma omp parallel for num_threads(workers) schedule(dynamic, 4)
  for (std::int64_t c = 0; c < chunks; ++c) {
    moments[static_cast<std::size_t>(c)] =
        detail::accumulate_chunk(kernel, scheme, rng, static_cast<std::uint64_t>(c), opts.samples);
  }
  return detail::finish(detail::tree_reduce(moments), opts.seed);
}

}  // namespace paswipt
