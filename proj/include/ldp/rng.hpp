#pragma once

#include <cstdint>
#include <cmath>

namespace ldp {

// Deterministic, platform-independent random numbers.
//
// Simulation output is part of the library's observable contract: the same
// seed must reproduce the same path on every platform, and distinct
// replicates must be reachable independently (so work can be chunked without
// generating earlier replicates first). std::mt19937 + std::normal_distribution
// would break both goals — the distribution's algorithm is
// implementation-defined — so we pin a small counter-based generator here.

// Finalizer with full avalanche: every input bit affects every output bit.
inline constexpr std::uint64_t avalanche64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Weyl-sequence increment (odd, near 2^64/golden-ratio) feeding the finalizer.
inline constexpr std::uint64_t kStreamIncrement = 0x9E3779B97F4A7C15ULL;

// Derives the seed of an independent child stream from a parent seed and a
// stream index. Used for replicate seeds: child r of seed s never collides
// with child r' of seed s unless r == r'.
inline constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return avalanche64(seed + (stream + 1) * kStreamIncrement);
}

// splitmix64: 2^64-period counter generator, one multiply-xor chain per draw.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kStreamIncrement;
    return avalanche64(state_);
  }

  // Uniform on (0, 1]: 53-bit mantissa, never returns 0 so log() is safe.
  double next_u01() {
    return static_cast<double>((next() >> 11) + 1) * 0x1p-53;
  }

 private:
  std::uint64_t state_;
};

// Standard normal variates via the Marsaglia polar method on top of
// SplitMix64. Exact rejection sampling — no quantile approximation error.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : bits_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * bits_.next_u01() - 1.0;
      v = 2.0 * bits_.next_u01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  SplitMix64 bits_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ldp
