#pragma once

#include <cstdint>
#include <random>

namespace growgraph {

/// splitmix64 finalizer; used to derive independent per-replicate seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for replicate `replicate` of a run started with `seed`.
/// Serial and parallel runners both use this, so results do not depend on
/// the worker count.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t replicate) noexcept {
  return mix64(mix64(seed) ^ mix64(replicate + 0x632be59bd9b4e019ULL));
}

/// Explicitly passed source of randomness. Every sampler in the library takes
/// one of these by reference; nothing holds hidden generator state.
///
/// The conversions below are written out by hand instead of using the
/// <random> distributions, whose output sequences differ between standard
/// library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream for_replicate(std::uint64_t seed, std::uint64_t replicate) {
    return RandomStream(derive_seed(seed, replicate));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound must be positive. Unbiased:
  /// draws below 2^64 mod bound are rejected.
  std::uint64_t uniform_index(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x = engine_();
    while (x < threshold) x = engine_();
    return x % bound;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace growgraph
