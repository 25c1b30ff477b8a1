#include "haarlab/accumulator.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace haarlab {

namespace {

struct Decomposed {
  std::uint64_t mantissa;  // integer significand, < 2^53
  int position;            // bit position of mantissa bit 0 in the accumulator
  bool negative;
  bool zero;
};

Decomposed decompose(double x) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
  const bool negative = bits >> 63;
  const int biased = static_cast<int>((bits >> 52) & 0x7ff);
  const std::uint64_t fraction = bits & ((1ull << 52) - 1);
  if (biased == 0x7ff) {
    throw std::invalid_argument("ExactFloatSum: non-finite value");
  }
  if (biased == 0) {
    // Subnormal (or zero): value = fraction * 2^-1074.
    return {fraction, -1074 + ExactFloatSum::kFractionBits, negative, fraction == 0};
  }
  return {fraction | (1ull << 52), biased - 1075 + ExactFloatSum::kFractionBits,
          negative, false};
}

// Double-double helpers for the final variance evaluation.
struct DoubleDouble {
  double hi;
  double lo;
};

DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DoubleDouble dd_add(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

DoubleDouble dd_neg(DoubleDouble a) { return {-a.hi, -a.lo}; }

DoubleDouble dd_mul(DoubleDouble a, DoubleDouble b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

DoubleDouble dd_div_by(DoubleDouble a, double d) {
  const double q1 = a.hi / d;
  const DoubleDouble p = two_prod(q1, d);
  const double q2 = ((a.hi - p.hi) - p.lo + a.lo) / d;
  return quick_two_sum(q1, q2);
}

}  // namespace

void ExactFloatSum::add(double x) {
  const Decomposed d = decompose(x);
  if (d.zero) return;
  if (d.negative) {
    subtract_magnitude(d.mantissa, d.position);
  } else {
    add_magnitude(d.mantissa, d.position);
  }
}

void ExactFloatSum::add(const ExactFloatSum& other) {
  std::uint64_t carry = 0;
  for (int i = 0; i < kLimbs; ++i) {
    std::uint64_t s = limbs_[i] + other.limbs_[i];
    std::uint64_t c = s < other.limbs_[i] ? 1u : 0u;
    s += carry;
    c |= s < carry ? 1u : 0u;
    limbs_[i] = s;
    carry = c;
  }
}

void ExactFloatSum::add_magnitude(std::uint64_t mantissa, int position) {
  const int limb = position >> 6;
  const int offset = position & 63;
  const std::uint64_t lo = mantissa << offset;
  const std::uint64_t hi = offset ? mantissa >> (64 - offset) : 0;

  std::uint64_t s = limbs_[limb] + lo;
  std::uint64_t carry = s < lo ? 1u : 0u;
  limbs_[limb] = s;

  std::uint64_t pending = hi;
  for (int i = limb + 1; i < kLimbs && (pending || carry); ++i) {
    s = limbs_[i] + pending;
    std::uint64_t c = s < pending ? 1u : 0u;
    s += carry;
    c |= s < carry ? 1u : 0u;
    limbs_[i] = s;
    carry = c;
    pending = 0;
  }
}

void ExactFloatSum::subtract_magnitude(std::uint64_t mantissa, int position) {
  const int limb = position >> 6;
  const int offset = position & 63;
  const std::uint64_t lo = mantissa << offset;
  const std::uint64_t hi = offset ? mantissa >> (64 - offset) : 0;

  std::uint64_t borrow = limbs_[limb] < lo ? 1u : 0u;
  limbs_[limb] -= lo;

  std::uint64_t pending = hi;
  for (int i = limb + 1; i < kLimbs && (pending || borrow); ++i) {
    const std::uint64_t cur = limbs_[i];
    std::uint64_t s = cur - pending;
    std::uint64_t b = cur < pending ? 1u : 0u;
    b |= s < borrow ? 1u : 0u;
    s -= borrow;
    limbs_[i] = s;
    borrow = b;
    pending = 0;
  }
}

void ExactFloatSum::negate() {
  std::uint64_t carry = 1;
  for (int i = 0; i < kLimbs; ++i) {
    limbs_[i] = ~limbs_[i] + carry;
    carry = carry & (limbs_[i] == 0 ? 1u : 0u);
  }
}

bool ExactFloatSum::is_zero() const {
  for (std::uint64_t l : limbs_) {
    if (l != 0) return false;
  }
  return true;
}

double ExactFloatSum::to_double() const {
  ExactFloatSum t = *this;
  const bool negative = t.is_negative();
  if (negative) t.negate();

  int top = kLimbs - 1;
  while (top >= 0 && t.limbs_[top] == 0) --top;
  if (top < 0) return 0.0;

  const int msb = 63 - std::countl_zero(t.limbs_[top]);
  const int pos = top * 64 + msb;

  const auto bit_at = [&t](int p) -> std::uint64_t {
    if (p < 0) return 0;
    return (t.limbs_[p >> 6] >> (p & 63)) & 1u;
  };

  std::uint64_t mantissa = 0;
  for (int b = 0; b < 53; ++b) {
    mantissa = (mantissa << 1) | bit_at(pos - b);
  }

  const int round_pos = pos - 53;
  bool sticky = false;
  if (round_pos > 0) {
    for (int i = 0; i < (round_pos >> 6) && !sticky; ++i) {
      sticky = t.limbs_[i] != 0;
    }
    const int rem = round_pos & 63;
    if (!sticky && rem > 0) {
      sticky = (t.limbs_[round_pos >> 6] & ((1ull << rem) - 1)) != 0;
    }
  }

  int exponent = pos - 52 - kFractionBits;
  if (bit_at(round_pos) && (sticky || (mantissa & 1))) {
    ++mantissa;
    if (mantissa == (1ull << 53)) {
      mantissa >>= 1;
      ++exponent;
    }
  }
  const double magnitude = std::ldexp(static_cast<double>(mantissa), exponent);
  return negative ? -magnitude : magnitude;
}

std::pair<double, double> ExactFloatSum::to_double_double() const {
  const double hi = to_double();
  ExactFloatSum remainder = *this;
  remainder.add(-hi);
  return {hi, remainder.to_double()};
}

void MomentAccumulator::add(double x) {
  ++count_;
  sum_.add(x);
  const DoubleDouble sq = two_prod(x, x);
  sum_squares_.add(sq.hi);
  sum_squares_.add(sq.lo);
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  count_ += other.count_;
  sum_.add(other.sum_);
  sum_squares_.add(other.sum_squares_);
}

double MomentAccumulator::mean() const {
  if (count_ == 0) return 0.0;
  return sum_.to_double() / static_cast<double>(count_);
}

double MomentAccumulator::variance() const {
  if (count_ < 2) return 0.0;
  const auto [s_hi, s_lo] = sum_.to_double_double();
  const auto [q_hi, q_lo] = sum_squares_.to_double_double();
  const DoubleDouble s{s_hi, s_lo};
  const DoubleDouble mean = dd_div_by(s, static_cast<double>(count_));
  // sum (x - m)^2 = sum x^2 - m * sum x exactly when m = sum x / n.
  const DoubleDouble m2 = dd_add({q_hi, q_lo}, dd_neg(dd_mul(mean, s)));
  const double v = m2.hi / static_cast<double>(count_ - 1);
  return v > 0.0 ? v : 0.0;
}

double MomentAccumulator::standard_error() const {
  if (count_ == 0) return 0.0;
  return std::sqrt(variance() / static_cast<double>(count_));
}

}  // namespace haarlab
