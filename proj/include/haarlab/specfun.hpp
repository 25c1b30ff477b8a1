#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace haarlab::specfun {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
/// Relative error <= 1e-13 on [0.5, 1e6]; throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Euler beta function B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y), evaluated in log
/// space so it survives large arguments. Domain error for non-positive x or y.
double beta(double x, double y);

/// Laguerre polynomial L_k(x) via the stable three-term recurrence.
double laguerre(int k, double x);

// A rational multiple of sqrt(pi): numerator/denominator * sqrt(pi), stored in
// lowest terms with denominator > 0. Gamma(n + 3/2) products are always of
// this shape, which is what makes the Laguerre integrals exactly representable.
struct ExactHalfInteger {
  BigInt numerator;
  BigInt denominator;

  // num/den as a double (no sqrt(pi) factor).
  double coefficient() const;
  // The represented value, coefficient() * sqrt(pi).
  double value() const;

  BigRational rational() const { return BigRational(numerator, denominator); }
};

/// I^(1/2)_kk = integral of e^(-x) sqrt(x) L_k(x)^2 over [0, inf), evaluated
/// exactly in big-rational arithmetic. The alternating sum cancels
/// catastrophically in floating point for k of a few tens; here every term is
/// an exact rational so the result is exact for any k.
ExactHalfInteger laguerre_integral_half(int k);

/// Exact rational coefficient of sqrt(pi) in sum_{k=0}^{count-1} I^(1/2)_kk.
BigRational laguerre_integral_half_sum(int count);

}  // namespace haarlab::specfun
