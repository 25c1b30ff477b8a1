#include <cmath>
#include <numbers>

#include "doctest.h"
#include "haarlab/rng.hpp"
#include "haarlab/specfun.hpp"
#include "oracles.hpp"

using namespace haarlab;
namespace sf = haarlab::specfun;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("log_gamma anchor values") {
  CHECK(sf::log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sf::log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sf::log_gamma(0.5) ==
        doctest::Approx(0.5723649429247001).epsilon(1e-13));
  // High-precision references (50-digit arithmetic).
  CHECK(sf::log_gamma(10.5) ==
        doctest::Approx(13.940625219403763633).epsilon(1e-13));
  CHECK(sf::log_gamma(1000000.5) ==
        doctest::Approx(12815511.476902765642).epsilon(1e-13));
  CHECK(sf::log_gamma(16384.0) ==
        doctest::Approx(142603.39460147356337).epsilon(1e-13));
  CHECK(sf::log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK_THROWS_AS(sf::log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(sf::log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_gamma tracks the library implementation across the range") {
  for (double x = 0.5; x < 1.0e6; x *= 1.37) {
    const double expected = std::lgamma(x);
    const double got = sf::log_gamma(x);
    const double scale = std::max(1.0, std::abs(expected));
    CHECK(std::abs(got - expected) / scale <= 5e-14);
  }
}

TEST_CASE("beta values and symmetry") {
  CHECK(sf::beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sf::beta(0.5, 2.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK_THROWS_AS(sf::beta(0.0, 1.0), std::domain_error);

  // Quadrature cross-check of B(1/2, 64) via t = u^2, which removes the
  // endpoint singularity: B(1/2, N) = 2 * integral (1-u^2)^(N-1) du.
  const double quad = 2.0 * oracles::adaptive_quadrature(
                                [](double u) { return std::pow(1.0 - u * u, 63.0); },
                                0.0, 1.0, 1e-13);
  CHECK(sf::beta(0.5, 64.0) == doctest::Approx(quad).epsilon(1e-11));

  RngStream stream = RngStream::derive(77, 0);
  for (int i = 0; i < 200; ++i) {
    const double x = 0.1 + 20.0 * stream.next_double();
    const double y = 0.1 + 20.0 * stream.next_double();
    CHECK(sf::beta(x, y) == doctest::Approx(sf::beta(y, x)).epsilon(1e-13));
  }
}

TEST_CASE("laguerre recurrence vs explicit factorial sum") {
  CHECK(sf::laguerre(0, 3.7) == 1.0);
  CHECK(sf::laguerre(1, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));

  // L_k(x) = sum_n C(k,n) (-x)^n / n!
  const auto explicit_sum = [](int k, double x) {
    double sum = 0.0;
    double binom = 1.0;
    double power = 1.0;
    double fact = 1.0;
    for (int n = 0; n <= k; ++n) {
      if (n > 0) {
        binom = binom * (k - n + 1) / n;
        power *= -x;
        fact *= n;
      }
      sum += binom * power / fact;
    }
    return sum;
  };
  CHECK(sf::laguerre(5, 1.3) == doctest::Approx(explicit_sum(5, 1.3)).epsilon(1e-12));
  for (int k = 0; k <= 12; ++k) {
    CHECK(sf::laguerre(k, 0.25) ==
          doctest::Approx(explicit_sum(k, 0.25)).epsilon(1e-12));
  }
}

TEST_CASE("laguerre orthogonality under e^-x") {
  for (int i = 0; i <= 10; ++i) {
    for (int j = i; j <= 10; ++j) {
      const double integral = oracles::adaptive_quadrature(
          [i, j](double x) {
            return std::exp(-x) * sf::laguerre(i, x) * sf::laguerre(j, x);
          },
          0.0, 220.0, 1e-11);
      CHECK(integral == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("laguerre_integral_half exact rationals") {
  const auto i0 = sf::laguerre_integral_half(0);
  CHECK(i0.numerator == 1);
  CHECK(i0.denominator == 2);
  CHECK(i0.value() == doctest::Approx(0.5 * kSqrtPi).epsilon(1e-15));

  const auto i1 = sf::laguerre_integral_half(1);
  CHECK(i1.numerator == 7);
  CHECK(i1.denominator == 8);
  CHECK(i1.value() == doctest::Approx(0.875 * kSqrtPi).epsilon(1e-15));

  const auto i2 = sf::laguerre_integral_half(2);
  CHECK(i2.numerator == 145);
  CHECK(i2.denominator == 128);

  CHECK_THROWS_AS(sf::laguerre_integral_half(-1), std::domain_error);
}

TEST_CASE("laguerre_integral_half vs quadrature, k <= 64") {
  for (int k = 0; k <= 64; k += (k < 8 ? 1 : 7)) {
    const auto exact = sf::laguerre_integral_half(k);
    CHECK(exact.numerator > 0);  // integrand is non-negative
    const double quad = oracles::oracle_quadrature_laguerre(k, 0.5);
    CHECK(std::abs(exact.value() - quad) / quad <= 1e-10);
  }
}

TEST_CASE("laguerre_integral_half supports large orders") {
  const auto big = sf::laguerre_integral_half(1024);
  CHECK(big.numerator > 0);
  CHECK(big.denominator > 0);
  const double v = big.value();
  CHECK(std::isfinite(v));
  // Grows like sqrt(k); 2 sqrt(k)/pi * ... stays well within (1, 100).
  CHECK(v > 1.0);
  CHECK(v < 100.0);
}

TEST_CASE("laguerre_integral_half_sum matches per-order values") {
  sf::BigRational sum = 0;
  for (int k = 0; k < 12; ++k) {
    sum += sf::laguerre_integral_half(k).rational();
  }
  CHECK(sum == sf::laguerre_integral_half_sum(12));
}
