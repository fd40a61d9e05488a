#pragma once

#include <cstdint>
#include <string_view>

// Reproducible randomness. Trials never share a generator: stream t of a
// run is an independent xoshiro256++ instance whose state is expanded by
// splitmix64 from mix(master_seed, t). Identical (master_seed, t) gives an
// identical stream on every platform and thread schedule, which is what
// makes parallel runs byte-stable.

namespace altseq {

inline constexpr std::string_view kRngName = "xoshiro256++";
inline constexpr std::string_view kRngVersion = "1.0";
inline constexpr std::string_view kStreamDerivation =
    "state = splitmix64(splitmix64_mix(master_seed ^ (trial+1)*0x9E3779B97F4A7C15))";

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t splitmix64_mix(std::uint64_t v) { return SplitMix64(v).next(); }

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Unbiased uniform integer in [0, bound) (Lemire rejection).
  std::uint64_t next_below(std::uint64_t bound) {
    __uint128_t m = static_cast<__uint128_t>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<__uint128_t>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4];
};

/// Independent generator for trial t of a run.
inline Xoshiro256pp derive_stream(std::uint64_t master_seed, std::uint64_t trial) {
  return Xoshiro256pp(splitmix64_mix(master_seed ^ ((trial + 1) * 0x9E3779B97F4A7C15ULL)));
}

}  // namespace altseq
