#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ellss {

// Counter-based random stream. Each output is mix(key + i * golden) where i is
// the draw slot, so a stream is a pure function of (key, slot). Substreams get
// fresh keys; chains, steps and verification jobs each own one, which keeps
// every draw addressable as (seed, chain, step, slot) and makes paired runs of
// the two sampler variants consume identical variates slot by slot.
//
// The mixer is the splitmix64 finalizer (Steele, Lea, Flood 2014).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : key_(mix(seed + kSalt)), counter_(0) {}

  // Derived stream with a decorrelated key; the child starts at slot 0.
  RngStream substream(std::uint64_t id) const {
    return RngStream(mix(key_ + kGolden * (id + 1)), 0);
  }

  std::uint64_t next_u64() { return mix(key_ + kGolden * ++counter_); }

  // Uniform on [0,1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // lo + u * (hi - lo); half-open [lo, hi). The exact expression matters:
  // paired sampler variants rely on it bit for bit.
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Standard normal via the cosine form of Box-Muller. Consumes exactly two
  // uniforms per variate (no cached partner), so slot alignment is preserved.
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t slot() const { return counter_; }

 private:
  RngStream(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGolden = UINT64_C(0x9E3779B97F4A7C15);
  static constexpr std::uint64_t kSalt = UINT64_C(0x243F6A8885A308D3);

  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace ellss
