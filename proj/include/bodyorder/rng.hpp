#pragma once

#include <cstdint>

namespace bodyorder {

/// splitmix64; deterministic across platforms, which the generators and
/// searches rely on for reproducible output.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n); the modulo bias is irrelevant at the
  /// ranges used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform-ish value in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace bodyorder
