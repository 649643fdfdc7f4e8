#pragma once

#include <cstdint>

namespace sixcircles {

/// Counter-based generator: the stream for (seed, key) is a pure function of
/// both, so sample k can be drawn without touching samples 0..k-1.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t key)
      : state_(mix(seed ^ mix(key + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
    std::uint64_t x = next();
    while (limit != 0 && x >= limit) x = next();
    return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace sixcircles
