#include "haarlab/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace haarlab {

CoherenceValue l1_coherence(const PureState& state) {
  double s = 0.0;
  for (const auto& a : state.amplitudes) s += std::abs(a);
  return {s * s - 1.0, state.dim()};
}

CoherenceValue relative_entropy_coherence(const PureState& state) {
  double h = 0.0;
  for (const auto& a : state.amplitudes) {
    const double p = std::norm(a);
    if (p > 0.0) h -= p * std::log(p);
  }
  return {h, state.dim()};
}

NegativityValue negativity(const SchmidtSpectrum& spectrum) {
  double s = 0.0;
  for (double l : spectrum.lambdas) s += std::sqrt(l);
  return {(s * s - 1.0) / 2.0, (spectrum.dim() - 1) / 2.0};
}

double alpha_classical_purity(const SimplexPoint& diag, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("alpha_classical_purity: alpha must be positive");
  }
  double s = 0.0;
  for (double w : diag.weights) {
    if (w > 0.0) s += std::pow(w, alpha);
  }
  return s;
}

}  // namespace haarlab
