#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "haarlab/distances.hpp"
#include "haarlab/measures.hpp"
#include "haarlab/states.hpp"
#include "oracles.hpp"

using namespace haarlab;

namespace {

SchmidtSpectrum uniform_spectrum(int n) {
  SchmidtSpectrum s;
  s.lambdas.assign(n, 1.0 / n);
  return s;
}

double hs_between(const BipartitePureState& a, const BipartitePureState& b) {
  std::complex<double> inner = 0.0;
  const int n = a.subsystem_dim();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      inner += std::conj(a.amplitudes(r, c)) * b.amplitudes(r, c);
    }
  }
  const double f = std::abs(inner);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * f * f));
}

}  // namespace

TEST_CASE("distance_to_max_entangled trivial spectra") {
  for (int n : {2, 4, 16}) {
    const auto d = distance_to_max_entangled(uniform_spectrum(n));
    CHECK(d.trace == doctest::Approx(0.0));
    CHECK(d.hilbert_schmidt == doctest::Approx(0.0));
    CHECK(d.bures == doctest::Approx(0.0));

    SchmidtSpectrum product;
    product.lambdas.assign(n, 0.0);
    product.lambdas[0] = 1.0;
    const auto dp = distance_to_max_entangled(product);
    CHECK(dp.trace == doctest::Approx(2.0 * std::sqrt(1.0 - 1.0 / n)).epsilon(1e-13));
    CHECK(dp.bures ==
          doctest::Approx(std::numbers::sqrt2 *
                          std::sqrt(1.0 - 1.0 / std::sqrt(static_cast<double>(n))))
              .epsilon(1e-13));
  }
}

TEST_CASE("distance_to_max_entangled matches the brute-force minimizer at N=2") {
  // lambda = (3/4, 1/4): trace distance 2 sqrt(1 - (sqrt(3)+1)^2/8).
  SchmidtSpectrum skew{{0.75, 0.25}};
  const auto d = distance_to_max_entangled(skew);
  const double expected = 2.0 * std::sqrt(1.0 - std::pow(std::sqrt(3.0) + 1.0, 2) / 8.0);
  CHECK(d.trace == doctest::Approx(expected).epsilon(1e-13));

  BipartitePureState state;
  state.amplitudes = Eigen::MatrixXcd::Zero(2, 2);
  state.amplitudes(0, 0) = std::sqrt(0.75);
  state.amplitudes(1, 1) = std::sqrt(0.25);
  const double grid_min = oracles::oracle_min_distance_entangled(state, 24);
  CHECK(grid_min >= d.trace - 1e-9);
  CHECK(grid_min <= d.trace + 1e-3);

  for (int i = 0; i < 5; ++i) {
    RngStream s = RngStream::derive(1414, i);
    const auto random_state = haar_sample_bipartite(2, s);
    const auto fast = distance_to_max_entangled(schmidt_spectrum(random_state));
    const double oracle = oracles::oracle_min_distance_entangled(random_state, 24);
    CHECK(oracle >= fast.trace - 1e-9);
    CHECK(oracle <= fast.trace + 1e-3);
  }
}

TEST_CASE("distance_to_max_coherent examples and phase-grid oracle") {
  PureState uniform_with_phases{{std::polar(0.5, 0.3), std::polar(0.5, -1.1),
                                 std::polar(0.5, 2.2), std::polar(0.5, 0.9)}};
  const auto d0 = distance_to_max_coherent(uniform_with_phases);
  CHECK(d0.trace == doctest::Approx(0.0).epsilon(1e-7));

  for (int n : {2, 3, 8}) {
    PureState basis;
    basis.amplitudes.assign(n, 0.0);
    basis.amplitudes[0] = 1.0;
    CHECK(distance_to_max_coherent(basis).trace ==
          doctest::Approx(2.0 * std::sqrt(1.0 - 1.0 / n)).epsilon(1e-13));
  }

  // psi = (sqrt(0.9), sqrt(0.1)): Delta_Tr = 2 sqrt(0.2), Delta_HS = sqrt(0.4).
  PureState skew{{std::sqrt(0.9), std::sqrt(0.1)}};
  const auto d = distance_to_max_coherent(skew);
  CHECK(d.trace == doctest::Approx(2.0 * std::sqrt(0.2)).epsilon(1e-13));
  CHECK(d.hilbert_schmidt == doctest::Approx(std::sqrt(0.4)).epsilon(1e-13));
  const double grid_min = oracles::oracle_min_distance_coherent(skew, 64);
  CHECK(grid_min >= d.trace - 1e-9);
  CHECK(grid_min <= d.trace + 1e-4);

  for (int i = 0; i < 8; ++i) {
    RngStream s = RngStream::derive(1515, i);
    const auto psi = haar_sample(3, s);
    const auto fast = distance_to_max_coherent(psi);
    const double oracle = oracles::oracle_min_distance_coherent(psi, 48);
    CHECK(oracle >= fast.trace - 1e-9);
    CHECK(oracle <= fast.trace + 1e-3);
  }
}

TEST_CASE("DistanceTriple internal sqrt(2) ratio") {
  for (int i = 0; i < 200; ++i) {
    RngStream s = RngStream::derive(1616, i);
    const auto d = distance_to_max_coherent(haar_sample(5, s));
    if (d.hilbert_schmidt > 0.0) {
      CHECK(d.trace / d.hilbert_schmidt ==
            doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
    }
    const auto spectrum = schmidt_spectrum(haar_sample_bipartite(3, s));
    const auto de = distance_to_max_entangled(spectrum);
    if (de.hilbert_schmidt > 0.0) {
      CHECK(de.trace / de.hilbert_schmidt ==
            doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
    }
  }
}

TEST_CASE("complementarity residuals vanish") {
  CHECK(complementarity_residuals_entangled(uniform_spectrum(4)).trace <= 1e-12);
  CHECK(complementarity_residuals_entangled(uniform_spectrum(4)).hilbert_schmidt <=
        1e-12);

  SchmidtSpectrum product;
  product.lambdas.assign(8, 0.0);
  product.lambdas[0] = 1.0;
  CHECK(complementarity_residuals_entangled(product).trace <= 1e-12);

  const int n = 8;
  for (int i = 0; i < 10000; ++i) {
    RngStream s = RngStream::derive(1717, i);
    const auto r =
        complementarity_residuals_entangled(schmidt_spectrum(haar_sample_bipartite(n, s)));
    CHECK(r.trace <= 1e-9);
    CHECK(r.hilbert_schmidt <= 1e-9);
    const auto rc = complementarity_residuals_coherent(haar_sample(n, s));
    CHECK(rc.trace <= 1e-9);
    CHECK(rc.hilbert_schmidt <= 1e-9);
  }
}

TEST_CASE("trace distance to maximally mixed diagonal") {
  SimplexPoint uniform{{0.25, 0.25, 0.25, 0.25}};
  CHECK(diag_trace_distance_to_maxmixed(uniform) == doctest::Approx(0.0));
  SimplexPoint pure{{1.0, 0.0}};
  CHECK(diag_trace_distance_to_maxmixed(pure) == doctest::Approx(1.0));
  SimplexPoint p{{0.7, 0.2, 0.1}};
  const double third = 1.0 / 3.0;
  CHECK(diag_trace_distance_to_maxmixed(p) ==
        doctest::Approx(std::abs(0.7 - third) + std::abs(0.2 - third) +
                        std::abs(0.1 - third))
            .epsilon(1e-14));
}

TEST_CASE("sqrt trace inequality on diagonal pairs") {
  SimplexPoint p{{1.0, 0.0}};
  SimplexPoint q{{0.5, 0.5}};
  CHECK(sqrt_trace_inequality_check(p, p) == doctest::Approx(0.0));
  const double expected = 1.0 - std::pow(1.0 - 1.0 / std::numbers::sqrt2, 2) - 0.5;
  CHECK(sqrt_trace_inequality_check(p, q) == doctest::Approx(expected).epsilon(1e-13));
  CHECK_THROWS_AS((void)sqrt_trace_inequality_check(p, SimplexPoint{{1.0, 0.0, 0.0}}),
                  std::invalid_argument);

  for (int i = 0; i < 2000; ++i) {
    RngStream s = RngStream::derive(1818, i);
    const auto a = simplex_sample(16, s);
    const auto b = simplex_sample(16, s);
    CHECK(sqrt_trace_inequality_check(a, b) >= -1e-12);
  }
}

TEST_CASE("Bures lower bound for the diagonal trace distance") {
  // ||rho_A - I/N||_1 >= D_B^2 in the Schmidt basis and the coherent analogue.
  for (int i = 0; i < 3000; ++i) {
    RngStream s = RngStream::derive(1919, i);
    const auto spectrum = schmidt_spectrum(haar_sample_bipartite(4, s));
    SimplexPoint diag{spectrum.lambdas};
    const auto d = distance_to_max_entangled(spectrum);
    CHECK(diag_trace_distance_to_maxmixed(diag) >= d.bures * d.bures - 1e-10);

    const auto psi = haar_sample(6, s);
    const auto dc = distance_to_max_coherent(psi);
    CHECK(diag_trace_distance_to_maxmixed(diagonal_part(psi)) >=
          dc.bures * dc.bures - 1e-10);
  }
}

TEST_CASE("trace distance is strictly decreasing in the sqrt-sum") {
  const int n = 8;
  std::vector<std::pair<double, double>> points;  // (sqrt-sum, trace distance)
  for (int i = 0; i < 500; ++i) {
    RngStream s = RngStream::derive(2020, i);
    const auto spectrum = schmidt_spectrum(haar_sample_bipartite(n, s));
    double sum = 0.0;
    for (double l : spectrum.lambdas) sum += std::sqrt(l);
    points.emplace_back(sum, distance_to_max_entangled(spectrum).trace);
  }
  std::sort(points.begin(), points.end());
  for (std::size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].second < points[i - 1].second);
  }
}

TEST_CASE("Lipschitz bounds for squared distances on random pairs") {
  const int n = 3;
  for (int i = 0; i < 5000; ++i) {
    RngStream s = RngStream::derive(2121, i);
    const auto a = haar_sample_bipartite(n, s);
    const auto b = haar_sample_bipartite(n, s);
    const double hs = hs_between(a, b);
    const auto da = distance_to_max_entangled(schmidt_spectrum(a));
    const auto db = distance_to_max_entangled(schmidt_spectrum(b));
    CHECK(std::abs(da.trace * da.trace - db.trace * db.trace) <=
          2.0 * std::numbers::sqrt2 * hs + 1e-9);
    CHECK(std::abs(da.hilbert_schmidt * da.hilbert_schmidt -
                   db.hilbert_schmidt * db.hilbert_schmidt) <=
          std::numbers::sqrt2 * hs + 1e-9);
    CHECK(std::abs(da.bures * da.bures - db.bures * db.bures) <=
          std::numbers::sqrt2 * hs + 1e-9);
  }
}

TEST_CASE("coherent-set Lipschitz bounds on random pairs") {
  const int n = 5;
  for (int i = 0; i < 5000; ++i) {
    RngStream s = RngStream::derive(2222, i);
    const auto a = haar_sample(n, s);
    const auto b = haar_sample(n, s);
    const double hs = pure_state_hs_distance(a, b);
    const auto da = distance_to_max_coherent(a);
    const auto db = distance_to_max_coherent(b);
    CHECK(std::abs(da.trace * da.trace - db.trace * db.trace) <=
          2.0 * std::numbers::sqrt2 * hs + 1e-9);
    CHECK(std::abs(da.bures * da.bures - db.bures * db.bures) <=
          std::numbers::sqrt2 * hs + 1e-9);
  }
}
