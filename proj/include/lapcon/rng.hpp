#pragma once

#include <cstdint>

namespace lapcon {

// SplitMix64 (Vigna, 2015). The k-th output is a fixed function of
// (seed, k), so streams regenerate bit-identically from their seed and
// parallel schedulers cannot perturb them.
inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() { return splitmix64_mix(state_ += kGoldenGamma); }

  // Uniform double in [0,1): the top 53 bits of the next output.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Stable per-trial seed. Injective in `trial` for a fixed master seed:
// trial -> kGoldenGamma*(trial+1) is a bijection mod 2^64 (odd multiplier)
// and splitmix64_mix is a bijection, so derived seeds never collide.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64_mix(splitmix64_mix(master) ^ (kGoldenGamma * (trial + 1)));
}

}  // namespace lapcon
