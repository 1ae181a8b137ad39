#pragma once

#include <cstdint>

namespace paswipt {

/// Counter-based generator: draw number i is a pure function of (seed, i),
/// so any worker can produce any part of the stream without shared state.
///
/// Output i is the SplitMix64 finalizer applied to key + (i + 1) * gamma,
/// i.e. the i-th output of a SplitMix64 stream started at key, accessed at
/// random. The key is the mixed seed, so nearby seeds give unrelated streams.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : seed_(seed), key_(mix(seed)) {}

  constexpr std::uint64_t seed() const { return seed_; }

  constexpr std::uint64_t bits(std::uint64_t counter) const {
    return mix(key_ + (counter + 1) * kGamma);
  }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  constexpr double uniform(std::uint64_t counter) const {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t key_;
};

}  // namespace paswipt
