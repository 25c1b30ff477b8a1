#pragma once

#include <optional>
#include <span>
#include <string>

namespace haarlab::closedform {

// One analytic value as a function of N (and alpha where relevant), with the
// N -> infinity limit when one is known. `asymptotic` marks large-N reference
// constants that are not exact at finite N.
struct ClosedFormValue {
  std::string quantity;
  int n = 0;
  std::optional<double> alpha;
  double value = 0.0;
  std::optional<double> limit_value;
  bool asymptotic = false;
};

/// E C_l1 = (N-1) pi / 4; the scaled ratio E C_l1 / (N-1) is pi/4 for every N.
ClosedFormValue mean_l1_coherence(int n);

/// Variance of C_l1:
///   (N-1)/(16(N+1)) * [ pi(16-5pi) N + (32 - 32 pi + 7 pi^2) ].
/// This is E C^2 - (E C)^2 with the published second-moment expression; the
/// published one-line variance drops a factor pi on the N term and is
/// inconsistent with both that second moment and simulation.
ClosedFormValue variance_l1_coherence(int n);

/// Variance of C_l1 / (N-1).
ClosedFormValue variance_l1_coherence_scaled(int n);

/// E C_l1^2 = (N-1)(N-2)(N-3) pi^2 / (16(N+1)) + (N-1)(N-2) pi / (N+1)
///            + 2(N-1)/(N+1).
ClosedFormValue mean_second_moment_l1(int n);

/// E C_r = sum_{k=2}^N 1/k (natural log convention); ratio to ln N -> 1.
ClosedFormValue mean_relative_entropy_coherence(int n);

/// E Delta_B^2(psi, M) = 2 - sqrt(N) B(1/2, N); limit 2 - sqrt(pi).
ClosedFormValue mean_bures_sq_to_max_coherent(int n);

/// E Delta_Tr^2(psi, M) = (N-1)(4-pi)/N.
ClosedFormValue mean_sq_trace_dist_to_max_coherent(int n);

/// RMS trace distance sqrt((4-pi)(N-1)/N); limit sqrt(4-pi).
ClosedFormValue rms_trace_dist_to_max_coherent(int n);

/// E D_B^2(psi_AB, M_E) =
///   2 [ 1 - Gamma(N^2)/Gamma(N^2+1/2) * sum_{k=0}^{N-1} I^(1/2)_kk / sqrt(N) ],
/// with the Laguerre integrals taken from their exact rational values. The
/// per-N sum is cached behind an internal lock.
ClosedFormValue mean_bures_sq_to_max_entangled(int n);

// Large-N reference constants implied by E N ~ 0.72037 N_max. Not exact at
// finite N.
struct NegativityReference {
  double mean_negativity;      // 0.72037 (N-1)/2
  double mean_scaled;          // 0.72037
  double mean_sq_trace_dist;   // 4 (1-0.72037)(N-1)/N  -> 1.11852
  double mean_sq_hs_dist;      // half of the trace value -> 0.55926
  bool asymptotic = true;
};

NegativityReference mean_negativity_reference(int n);

/// E ||psi^(d) - I/N||_1 = 2 (1 - 1/N)^N; limit 2/e.
ClosedFormValue mean_diag_trace_distance(int n);

/// E Tr[(psi^(d))^alpha] = Gamma(alpha+1) Gamma(N+1) / Gamma(alpha+N);
/// alpha = 1 returns 1 by continuity. Domain error for alpha <= 0.
ClosedFormValue mean_alpha_purity(int n, double alpha);

/// Variance of Tr[(psi^(d))^alpha]:
///   Gamma(N+1)/Gamma(N+2 alpha) [Gamma(2 alpha+1) + (N-1) Gamma(alpha+1)^2]
///   - (mean)^2.
ClosedFormValue variance_alpha_purity(int n, double alpha);

/// Uniform-Dirichlet moment E[prod lambda_i^{a_i}] =
///   Gamma(N)/Gamma(N + sum a_i) * prod Gamma(1 + a_i), in log space.
/// Throws std::domain_error on a negative exponent.
double dirichlet_moment(int n, std::span<const double> exponents);

}  // namespace haarlab::closedform
