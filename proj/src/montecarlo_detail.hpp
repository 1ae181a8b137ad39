#pragma once

#include <cstdint>
#include <span>

#include "paswipt/montecarlo.hpp"

namespace paswipt::detail {

struct ChunkMoments {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations from mean
};

std::uint64_t chunk_count(std::uint64_t samples);

/// Moments of metric values for users [chunk * kMcChunkSize, ...), two-pass
/// within the chunk.
ChunkMoments accumulate_chunk(const MetricKernel& kernel, const DeploymentScheme& scheme,
                              const CounterRng& rng, std::uint64_t chunk, std::uint64_t samples);

ChunkMoments merge(const ChunkMoments& a, const ChunkMoments& b);

/// Pairwise merge, split at the midpoint of the index range.
ChunkMoments tree_reduce(std::span<const ChunkMoments> chunks);

EstimateWithCI finish(const ChunkMoments& total, std::uint64_t seed);

void require_samples(std::uint64_t samples);

}  // namespace paswipt::detail
