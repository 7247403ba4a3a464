#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace expframe {

// splitmix64 (Steele/Lea/Flood). The state walks seed + k*GAMMA, the output is a
// bijective avalanche of the state, so the k-th draw is a pure function of
// (seed, k). All arithmetic is 64-bit unsigned; streams replay bit-identically
// on any platform, which is what makes selection traces auditable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Box-Muller; consumes exactly two draws per call (no cached spare).
  double gaussian() noexcept {
    double u = uniform01();
    if (u <= 0.0) u = 0x1.0p-53;
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
  }

  // Standard complex Gaussian, E|z|^2 = 1.
  std::complex<double> gaussian_complex() noexcept {
    const double s = 0.7071067811865475244008444;  // 1/sqrt(2)
    const double re = gaussian();
    const double im = gaussian();
    return {s * re, s * im};
  }

  std::uint64_t bounded(std::uint64_t n) noexcept { return next() % n; }

  // Fisher-Yates. Modulo bias is < 2^-50 for the sizes we shuffle and identical
  // on every platform.
  template <typename T>
  void shuffle(std::vector<T>& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stream for the i-th independent sub-task (trial, attempt, ...) of a seeded run.
inline SplitMix64 derived_rng(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64(seed + index);
}

}  // namespace expframe
