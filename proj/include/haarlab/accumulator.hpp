#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace haarlab {

// Error-free sum of doubles: a 2176-bit two's-complement fixed-point integer
// scaled by 2^-1088, wide enough for every finite double plus 64 bits of
// headroom. Because the stored value is the exact sum, addition of two
// accumulators is associative and commutative bit-for-bit, which is what the
// deterministic parallel-merge contract of the Monte Carlo harness needs.
class ExactFloatSum {
 public:
  static constexpr int kLimbs = 34;
  static constexpr int kFractionBits = 1088;

  /// Adds a finite double exactly. Throws std::invalid_argument on NaN/inf.
  void add(double x);

  /// Adds another accumulator exactly.
  void add(const ExactFloatSum& other);

  /// Nearest double (round to nearest, ties to even).
  double to_double() const;

  /// Head/tail pair: hi = to_double(), lo = nearest double of the remainder.
  std::pair<double, double> to_double_double() const;

  bool is_zero() const;

  friend bool operator==(const ExactFloatSum&, const ExactFloatSum&) = default;

 private:
  void add_magnitude(std::uint64_t mantissa, int position);
  void subtract_magnitude(std::uint64_t mantissa, int position);
  void negate();
  bool is_negative() const { return limbs_[kLimbs - 1] >> 63; }

  std::array<std::uint64_t, kLimbs> limbs_{};
};

// Streaming count / sum / sum-of-squares with exact accumulation. merge() is
// bit-exactly associative and commutative, so estimates are identical for any
// worker count and merge order.
class MomentAccumulator {
 public:
  void add(double x);
  void merge(const MomentAccumulator& other);

  std::uint64_t count() const { return count_; }
  double mean() const;
  /// Unbiased sample variance (0 for fewer than two samples), never negative.
  double variance() const;
  /// sqrt(variance / count).
  double standard_error() const;

  friend bool operator==(const MomentAccumulator&, const MomentAccumulator&) = default;

 private:
  std::uint64_t count_ = 0;
  ExactFloatSum sum_;
  ExactFloatSum sum_squares_;
};

}  // namespace haarlab
