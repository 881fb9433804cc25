#pragma once

#include <cstdint>

namespace rgspec {

// Splittable counter-free PRNG. A stream is a SplitMix64 sequence whose state
// is seeded as
//
//   state0 = mix64(master_seed ^ mix64((stream_index + 1) * 0x9E3779B97F4A7C15))
//
// where mix64 is the SplitMix64 finalizer. Identical (master_seed, stream_index)
// pairs yield bit-identical sequences on every platform; distinct stream indices
// give statistically independent streams, so replicas can run in parallel
// without sharing generator state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0)
      : state_(mix64(master_seed ^ mix64((stream_index + 1) * kGolden))) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += kGolden);
    return mix_steps(z);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

  // Uniform integer in [0, n), unbiased (rejection sampling).
  std::uint64_t next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  static std::uint64_t mix64(std::uint64_t z) { return mix_steps(z); }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix_steps(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace rgspec
