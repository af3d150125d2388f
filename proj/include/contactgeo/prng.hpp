#pragma once

#include <cstdint>

namespace contactgeo {

// SplitMix64.  Used instead of <random> engines/distributions so that check
// inputs are bit-identical across platforms, standard libraries, and thread
// counts.  Each (check, point) pair derives its own stream by mixing indices
// into the seed, so evaluation order never affects the sampled arguments.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1): 53 mantissa bits, exactly representable.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [-1, 1).
  double next_symmetric() { return 2.0 * next_unit() - 1.0; }
};

// Stable stream derivation: fold substream indices into a parent seed with
// distinct odd multipliers so (seed, i, j) collisions don't occur in practice.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t i,
                               std::uint64_t j = 0) {
  std::uint64_t z = seed;
  z ^= 0x9e3779b97f4a7c15ull + i * 0xff51afd7ed558ccdull;
  z ^= 0xc4ceb9fe1a85ec53ull + j * 0xc2b2ae3d27d4eb4full;
  SplitMix64 mix(z);
  return mix.next_u64();
}

}  // namespace contactgeo
