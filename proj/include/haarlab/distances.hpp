#pragma once

#include "haarlab/states.hpp"

namespace haarlab {

// Trace, Hilbert-Schmidt and Bures distance to a set of states.
// hilbert_schmidt == trace / sqrt(2) identically for the sets handled here.
struct DistanceTriple {
  double trace;
  double hilbert_schmidt;
  double bures;
};

// Residuals of the two complementarity identities (trace and Hilbert-Schmidt
// flavor); both are zero up to rounding for every state.
struct ComplementarityResiduals {
  double trace;
  double hilbert_schmidt;
};

/// Distances from a bipartite pure state with the given Schmidt spectrum to
/// the set of maximally entangled states:
///   trace = 2 sqrt(1 - s^2/N),  bures = sqrt(2) sqrt(1 - s/sqrt(N)),
/// with s = sum_i sqrt(lambda_i). Radicands are clamped at 0 (they can dip a
/// few ulp below for near-maximally-entangled spectra).
DistanceTriple distance_to_max_entangled(const SchmidtSpectrum& spectrum);

/// Distances from a pure state to the set of maximally coherent states; the
/// same formulas with lambda_i = |psi_i|^2 (the phase infimum is attained by
/// matching phases, so only moduli enter).
DistanceTriple distance_to_max_coherent(const PureState& state);

/// |N D_Tr^2 / 8 + negativity - N_max| and |N D_HS^2 / 4 + negativity - N_max|.
ComplementarityResiduals complementarity_residuals_entangled(
    const SchmidtSpectrum& spectrum);

/// |N Delta_Tr^2 / 4 + C_l1 - (N-1)| and |N Delta_HS^2 / 2 + C_l1 - (N-1)|.
ComplementarityResiduals complementarity_residuals_coherent(const PureState& state);

/// Trace distance of a diagonal state to the maximally mixed state,
/// sum_i |lambda_i - 1/N|.
double diag_trace_distance_to_maxmixed(const SimplexPoint& diag);

/// Residual of ||p - q||_1 >= ||sqrt(p) - sqrt(q)||_2^2 for commuting
/// (diagonal) operators: returns lhs - rhs, which must be >= -1e-12.
/// Throws std::invalid_argument on length mismatch.
double sqrt_trace_inequality_check(const SimplexPoint& p, const SimplexPoint& q);

}  // namespace haarlab
