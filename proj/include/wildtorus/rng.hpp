#pragma once
// Deterministic RNG used for all stochastic audits. splitmix64: identical
// streams on every platform, unlike std distributions.
#include <cstdint>

namespace wildtorus {

struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // uniform integer in [0, n)
  uint64_t below(uint64_t n) { return next() % n; }
};

} // namespace wildtorus
