#pragma once

#include <cstdint>

namespace dofsim {

// SplitMix64. Counter-based usage: every consumer derives its own stream
// from (seed, index) via derive_seed, so sampling is a pure function of its
// inputs no matter how trials are scheduled across workers.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [1, 2^31).
  int64_t next_coefficient() {
    return 1 + static_cast<int64_t>(next() % ((1ULL << 31) - 1));
  }
};

inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent stream for the index-th draw under a master seed.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
  return mix64(master + 0x9e3779b97f4a7c15ULL * (index + 1));
}

}  // namespace dofsim
