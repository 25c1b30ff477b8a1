#pragma once

#include "haarlab/states.hpp"

namespace haarlab {

// A coherence quantity together with the dimension it was computed in.
// 0 <= value <= N-1 for the l1 norm, 0 <= value <= ln N for relative entropy.
struct CoherenceValue {
  double value;
  int dim;
};

struct NegativityValue {
  double value;
  double max_value;  // (N-1)/2

  double scaled() const { return max_value > 0.0 ? value / max_value : 0.0; }
};

/// l1 norm of coherence of a pure state: (sum_i |psi_i|)^2 - 1, equal to the
/// off-diagonal modulus sum of the projector.
CoherenceValue l1_coherence(const PureState& state);

/// Relative entropy of coherence: Shannon entropy (natural log) of the
/// diagonal part, with 0 ln 0 = 0.
CoherenceValue relative_entropy_coherence(const PureState& state);

/// Pure-state negativity from the Schmidt spectrum:
/// ((sum_i sqrt(lambda_i))^2 - 1) / 2.
NegativityValue negativity(const SchmidtSpectrum& spectrum);

/// alpha-classical purity sum_i lambda_i^alpha, with 0^alpha = 0.
/// Domain error for alpha <= 0.
double alpha_classical_purity(const SimplexPoint& diag, double alpha);

}  // namespace haarlab
