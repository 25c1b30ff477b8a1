#include "haarlab/states.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace haarlab {

PureState haar_sample(int n, RngStream& stream) {
  if (n < 1) throw std::invalid_argument("haar_sample: dimension must be >= 1");
  PureState state;
  state.amplitudes.resize(n);
  double norm_sq = 0.0;
  for (auto& a : state.amplitudes) {
    a = stream.next_complex_gaussian();
    norm_sq += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& a : state.amplitudes) a *= inv;
  return state;
}

BipartitePureState haar_sample_bipartite(int n, RngStream& stream) {
  if (n < 1) {
    throw std::invalid_argument("haar_sample_bipartite: dimension must be >= 1");
  }
  BipartitePureState state;
  state.amplitudes.resize(n, n);
  double norm_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto g = stream.next_complex_gaussian();
      state.amplitudes(i, j) = g;
      norm_sq += std::norm(g);
    }
  }
  state.amplitudes *= 1.0 / std::sqrt(norm_sq);
  return state;
}

SchmidtSpectrum schmidt_spectrum(const BipartitePureState& state) {
  const int n = state.subsystem_dim();
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(state.amplitudes);
  if (svd.info() != Eigen::Success) {
    throw std::runtime_error("schmidt_spectrum: SVD did not converge");
  }
  SchmidtSpectrum spectrum;
  spectrum.lambdas.resize(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = svd.singularValues()(i);
    spectrum.lambdas[i] = std::max(0.0, s * s);
    sum += spectrum.lambdas[i];
  }
  const double drift = std::abs(sum - 1.0);
  if (drift > 1e-9) {
    throw std::runtime_error("schmidt_spectrum: spectrum sum drifted beyond 1e-9");
  }
  if (drift > 1e-12) {
    for (double& l : spectrum.lambdas) l /= sum;
  }
  std::sort(spectrum.lambdas.begin(), spectrum.lambdas.end(), std::greater<>());
  return spectrum;
}

SimplexPoint simplex_sample(int n, RngStream& stream) {
  if (n < 1) throw std::invalid_argument("simplex_sample: dimension must be >= 1");
  SimplexPoint point;
  point.weights.resize(n);
  double sum = 0.0;
  for (double& w : point.weights) {
    w = stream.next_exponential();
    sum += w;
  }
  for (double& w : point.weights) w /= sum;
  return point;
}

std::complex<double> overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  std::complex<double> acc = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return acc;
}

double pure_state_hs_distance(const PureState& a, const PureState& b) {
  const double f = std::abs(overlap(a, b));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * f * f));
}

SimplexPoint diagonal_part(const PureState& state) {
  SimplexPoint point;
  point.weights.resize(state.dim());
  for (int i = 0; i < state.dim(); ++i) {
    point.weights[i] = std::norm(state.amplitudes[i]);
  }
  return point;
}

}  // namespace haarlab
