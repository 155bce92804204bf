#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace dgfrft {

/**
 * Counter-based SplitMix64 stream.
 *
 * Draw k of stream `seed` is mix(seed + (k + 1) * 0x9E3779B97F4A7C15), where
 * mix is the SplitMix64 finalizer (Steele, Lea & Flood 2014). Every draw is a
 * pure function of (seed, k), so any subset of draws can be reproduced
 * without replaying the stream and results do not depend on which thread
 * consumes which counter range.
 *
 * Uniform doubles take the top 53 bits: u = (x >> 11) * 2^-53, in [0, 1).
 * Normal deviates use the Box–Muller transform on consecutive uniform pairs
 * (u1, u2): r = sqrt(-2 ln(1 - u1)), z0 = r cos(2 pi u2), z1 = r sin(2 pi u2).
 */
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  [[nodiscard]] std::uint64_t bits_at(std::uint64_t counter) const {
    return mix(seed_ + (counter + 1) * kGamma);
  }

  [[nodiscard]] double uniform_at(std::uint64_t counter) const {
    return static_cast<double>(bits_at(counter) >> 11) * 0x1.0p-53;
  }

  /// Normal pair built from uniforms at counters 2k and 2k+1.
  [[nodiscard]] std::pair<double, double> normal_pair_at(std::uint64_t k) const {
    const double u1 = uniform_at(2 * k);
    const double u2 = uniform_at(2 * k + 1);
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  // Sequential interface over the same counters.
  double next_uniform() { return uniform_at(counter_++); }

  [[nodiscard]] std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace dgfrft
