#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "haarlab/rng.hpp"

namespace haarlab {

// Unit-norm amplitude vector in the fixed reference basis.
struct PureState {
  std::vector<std::complex<double>> amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
};

// Pure state of an N x N bipartite system; entry (i, j) is the amplitude of
// |i>_A |j>_B. Unit Frobenius norm.
struct BipartitePureState {
  Eigen::MatrixXcd amplitudes;

  int subsystem_dim() const { return static_cast<int>(amplitudes.rows()); }
};

// Squared Schmidt coefficients, sorted non-increasing, summing to 1.
struct SchmidtSpectrum {
  std::vector<double> lambdas;

  int dim() const { return static_cast<int>(lambdas.size()); }
};

// Probability vector on the (N-1)-simplex, unordered.
struct SimplexPoint {
  std::vector<double> weights;

  int dim() const { return static_cast<int>(weights.size()); }
};

/// Haar-uniform pure state: i.i.d. standard complex Gaussian amplitudes
/// normalized to unit length.
PureState haar_sample(int n, RngStream& stream);

/// Haar-uniform state of an N x N bipartite system (the N^2 amplitudes are
/// uniform on the sphere of C^(N^2)).
BipartitePureState haar_sample_bipartite(int n, RngStream& stream);

/// Squared singular values of the amplitude matrix, clamped at 0, sorted
/// non-increasing; renormalized if the sum drifts beyond 1e-12, rejected
/// (std::runtime_error) if it drifts beyond 1e-9.
SchmidtSpectrum schmidt_spectrum(const BipartitePureState& state);

/// Uniform point on the simplex, Dirichlet(1,...,1): normalized i.i.d.
/// exponential variates. Same law as the diagonal of a Haar pure state.
SimplexPoint simplex_sample(int n, RngStream& stream);

/// <a|b>. Throws std::invalid_argument on dimension mismatch.
std::complex<double> overlap(const PureState& a, const PureState& b);

/// Hilbert-Schmidt distance between the projectors,
/// sqrt(2 - 2 |<a|b>|^2).
double pure_state_hs_distance(const PureState& a, const PureState& b);

/// (|psi_1|^2, ..., |psi_N|^2), unordered.
SimplexPoint diagonal_part(const PureState& state);

}  // namespace haarlab
