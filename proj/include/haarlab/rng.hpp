#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

namespace haarlab {

// SplitMix64 finalizer (Steele/Lea/Flood; public-domain constants by Vigna).
constexpr std::uint64_t splitmix_fin(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Splittable counter-derived random stream. Sample index i of a run maps to
// the independent substream derive(master_seed, i); a stream is a plain value
// that can be copied into any worker. Each substream is a SplitMix-style
// generator with its own odd increment, so distinct indices walk distinct
// orbits.
class RngStream {
 public:
  RngStream() = default;

  static RngStream derive(std::uint64_t master_seed, std::uint64_t index) noexcept {
    RngStream s;
    const std::uint64_t a = splitmix_fin(master_seed + 0x9e3779b97f4a7c15ull);
    const std::uint64_t b =
        splitmix_fin(a ^ (index + 0x632be59bd9b4e019ull) * 0xff51afd7ed558ccdull);
    s.state_ = b;
    s.gamma_ = splitmix_fin(b + index) | 1ull;
    return s;
  }

  std::uint64_t next_u64() noexcept {
    state_ += gamma_;
    return splitmix_fin(state_);
  }

  // Uniform on [0, 1), 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe as a logarithm argument.
  double next_double_open() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  double next_exponential() noexcept { return -std::log(next_double_open()); }

  // Box-Muller pair of independent standard normals.
  std::pair<double, double> next_gaussian_pair() noexcept {
    const double u1 = next_double_open();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  // Standard complex Gaussian: independent N(0,1) real and imaginary parts.
  std::complex<double> next_complex_gaussian() noexcept {
    const auto [re, im] = next_gaussian_pair();
    return {re, im};
  }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  std::uint64_t state_ = 0x853c49e6748fea9bull;
  std::uint64_t gamma_ = 0x9e3779b97f4a7c15ull;
};

}  // namespace haarlab
