#include "haarlab/distances.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace haarlab {

namespace {

// Distances as functions of s = sum_i sqrt(lambda_i) and N.
DistanceTriple from_sqrt_sum(double s, int n) {
  const double rad_tr = std::max(0.0, 1.0 - s * s / n);
  const double rad_b = std::max(0.0, 1.0 - s / std::sqrt(static_cast<double>(n)));
  const double trace = 2.0 * std::sqrt(rad_tr);
  return {trace, trace / std::numbers::sqrt2, std::numbers::sqrt2 * std::sqrt(rad_b)};
}

double sqrt_sum(const SchmidtSpectrum& spectrum) {
  double s = 0.0;
  for (double l : spectrum.lambdas) s += std::sqrt(l);
  return s;
}

double modulus_sum(const PureState& state) {
  double s = 0.0;
  for (const auto& a : state.amplitudes) s += std::abs(a);
  return s;
}

}  // namespace

DistanceTriple distance_to_max_entangled(const SchmidtSpectrum& spectrum) {
  return from_sqrt_sum(sqrt_sum(spectrum), spectrum.dim());
}

DistanceTriple distance_to_max_coherent(const PureState& state) {
  return from_sqrt_sum(modulus_sum(state), state.dim());
}

ComplementarityResiduals complementarity_residuals_entangled(
    const SchmidtSpectrum& spectrum) {
  const int n = spectrum.dim();
  const double s = sqrt_sum(spectrum);
  const DistanceTriple d = from_sqrt_sum(s, n);
  const double neg = (s * s - 1.0) / 2.0;
  const double neg_max = (n - 1) / 2.0;
  return {std::abs(n * d.trace * d.trace / 8.0 + neg - neg_max),
          std::abs(n * d.hilbert_schmidt * d.hilbert_schmidt / 4.0 + neg - neg_max)};
}

ComplementarityResiduals complementarity_residuals_coherent(const PureState& state) {
  const int n = state.dim();
  const double s = modulus_sum(state);
  const DistanceTriple d = from_sqrt_sum(s, n);
  const double c = s * s - 1.0;
  const double c_max = static_cast<double>(n - 1);
  return {std::abs(n * d.trace * d.trace / 4.0 + c - c_max),
          std::abs(n * d.hilbert_schmidt * d.hilbert_schmidt / 2.0 + c - c_max)};
}

double diag_trace_distance_to_maxmixed(const SimplexPoint& diag) {
  const double inv_n = 1.0 / diag.dim();
  double s = 0.0;
  for (double w : diag.weights) s += std::abs(w - inv_n);
  return s;
}

double sqrt_trace_inequality_check(const SimplexPoint& p, const SimplexPoint& q) {
  if (p.dim() != q.dim()) {
    throw std::invalid_argument("sqrt_trace_inequality_check: length mismatch");
  }
  double lhs = 0.0;
  double rhs = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    lhs += std::abs(p.weights[i] - q.weights[i]);
    const double d = std::sqrt(p.weights[i]) - std::sqrt(q.weights[i]);
    rhs += d * d;
  }
  return lhs - rhs;
}

}  // namespace haarlab
