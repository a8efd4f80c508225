#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace tsclust {

/// Finalizer of the SplitMix64 generator (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// SplitMix64 pseudo-random generator.
///
/// The generator identity is part of the reproducibility contract: every
/// seeded draw in this library goes through this class, with a fixed draw
/// order documented at each call site, so results replay bit-identically
/// across platforms and builds.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits. One draw.
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via the Box-Muller cosine branch. Consumes exactly two
  /// draws: u1 in (0, 1] first, then u2 in [0, 1).
  double next_gaussian() noexcept {
    const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Uniform integer in [0, bound) by modulo reduction. One draw. The modulo
  /// bias is immaterial for bound values far below 2^64.
  std::size_t next_below(std::size_t bound) noexcept {
    assert(bound > 0);
    return static_cast<std::size_t>(next() % bound);
  }

private:
  std::uint64_t state_;
};

/// Deterministic per-run seed derivation: distinct (index, stream) pairs give
/// statistically independent seeds from one base seed. Documented contract:
///   derive_seed(base, i, s) = mix64(mix64(base ^ C1*(i+1)) ^ C2*(s+1))
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index,
                                 std::uint64_t stream) noexcept {
  const std::uint64_t c1 = 0x9E3779B97F4A7C15ull;
  const std::uint64_t c2 = 0xD1B54A32D192ED03ull;
  return mix64(mix64(base ^ (c1 * (index + 1))) ^ (c2 * (stream + 1)));
}

}  // namespace tsclust
