#include "haarlab/closedform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "haarlab/specfun.hpp"

namespace haarlab::closedform {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMeanScaledNegativity = 0.72037;

void require_dim(int n) {
  if (n < 1) throw std::domain_error("closedform: dimension must be >= 1");
}

void require_alpha(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("closedform: alpha must be positive");
}

}  // namespace

ClosedFormValue mean_l1_coherence(int n) {
  require_dim(n);
  return {"mean_l1", n, std::nullopt, (n - 1) * kPi / 4.0, std::nullopt};
}

ClosedFormValue variance_l1_coherence(int n) {
  require_dim(n);
  const double v = n == 1 ? 0.0
                          : (n - 1.0) / (16.0 * (n + 1.0)) *
                                (kPi * (16.0 - 5.0 * kPi) * n +
                                 (32.0 - 32.0 * kPi + 7.0 * kPi * kPi));
  return {"var_l1", n, std::nullopt, v, std::nullopt};
}

ClosedFormValue variance_l1_coherence_scaled(int n) {
  require_dim(n);
  const double v =
      n == 1 ? 0.0 : variance_l1_coherence(n).value / ((n - 1.0) * (n - 1.0));
  return {"var_l1_scaled", n, std::nullopt, v, 0.0};
}

ClosedFormValue mean_second_moment_l1(int n) {
  require_dim(n);
  const double m = n - 1.0;
  const double v = (m * (n - 2.0) * (n - 3.0) * kPi * kPi / 16.0 +
                    m * (n - 2.0) * kPi + 2.0 * m) /
                   (n + 1.0);
  return {"second_moment_l1", n, std::nullopt, v, std::nullopt};
}

ClosedFormValue mean_relative_entropy_coherence(int n) {
  require_dim(n);
  double h = 0.0;
  for (int k = 2; k <= n; ++k) h += 1.0 / k;
  return {"mean_relent", n, std::nullopt, h, std::nullopt};
}

ClosedFormValue mean_bures_sq_to_max_coherent(int n) {
  require_dim(n);
  const double v = 2.0 - std::sqrt(static_cast<double>(n)) * specfun::beta(0.5, n);
  return {"d2_b_coh", n, std::nullopt, v, 2.0 - std::sqrt(kPi)};
}

ClosedFormValue mean_sq_trace_dist_to_max_coherent(int n) {
  require_dim(n);
  return {"d2_tr_coh", n, std::nullopt, (n - 1.0) * (4.0 - kPi) / n, 4.0 - kPi};
}

ClosedFormValue rms_trace_dist_to_max_coherent(int n) {
  require_dim(n);
  return {"rms_tr_coh", n, std::nullopt,
          std::sqrt((4.0 - kPi) * (n - 1.0) / n), std::sqrt(4.0 - kPi)};
}

namespace {

// Coefficient of sqrt(pi) in sum_{k=0}^{n-1} I^(1/2)_kk, memoized per n.
double laguerre_sum_coefficient(int n) {
  static std::mutex mutex;
  static std::map<int, double> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const auto sum = specfun::laguerre_integral_half_sum(n);
    it = cache.emplace(n, sum.convert_to<double>()).first;
  }
  return it->second;
}

}  // namespace

ClosedFormValue mean_bures_sq_to_max_entangled(int n) {
  require_dim(n);
  const double nn = static_cast<double>(n) * n;
  const double gamma_ratio = std::exp(specfun::log_gamma(nn) - specfun::log_gamma(nn + 0.5));
  const double mean_sqrt_sum =
      gamma_ratio * laguerre_sum_coefficient(n) * std::sqrt(kPi);
  const double v = 2.0 * (1.0 - mean_sqrt_sum / std::sqrt(static_cast<double>(n)));
  // The exact sum has no published limit; 2(1 - 8/(3pi)) is what the
  // Marchenko-Pastur law of the Schmidt spectrum gives and matches the
  // computed plateau.
  return {"d2_b_ent", n, std::nullopt, v, 2.0 * (1.0 - 8.0 / (3.0 * kPi))};
}

NegativityReference mean_negativity_reference(int n) {
  if (n < 2) throw std::domain_error("mean_negativity_reference: N must be >= 2");
  const double tr = 4.0 * (1.0 - kMeanScaledNegativity) * (n - 1.0) / n;
  return {kMeanScaledNegativity * (n - 1.0) / 2.0, kMeanScaledNegativity, tr,
          tr / 2.0};
}

ClosedFormValue mean_diag_trace_distance(int n) {
  require_dim(n);
  const double v =
      n == 1 ? 0.0 : 2.0 * std::exp(n * std::log1p(-1.0 / n));
  return {"diag_trace_dist", n, std::nullopt, v, 2.0 / std::numbers::e};
}

ClosedFormValue mean_alpha_purity(int n, double alpha) {
  require_dim(n);
  require_alpha(alpha);
  double v;
  if (alpha == 1.0) {
    v = 1.0;
  } else {
    v = std::exp(specfun::log_gamma(alpha + 1.0) + specfun::log_gamma(n + 1.0) -
                 specfun::log_gamma(alpha + n));
  }
  return {"alpha_purity", n, alpha, v, alpha > 1.0 ? std::optional<double>(0.0)
                                                   : std::nullopt};
}

ClosedFormValue variance_alpha_purity(int n, double alpha) {
  require_dim(n);
  require_alpha(alpha);
  double v;
  if (alpha == 1.0) {
    v = 0.0;
  } else {
    const double mean = mean_alpha_purity(n, alpha).value;
    const double log_gn1 = specfun::log_gamma(n + 1.0);
    const double second =
        std::exp(log_gn1 - specfun::log_gamma(n + 2.0 * alpha)) *
        (std::exp(specfun::log_gamma(2.0 * alpha + 1.0)) +
         (n - 1.0) * std::exp(2.0 * specfun::log_gamma(alpha + 1.0)));
    v = second - mean * mean;
  }
  return {"alpha_purity_var", n, alpha, v, alpha > 1.0 ? std::optional<double>(0.0)
                                                       : std::nullopt};
}

double dirichlet_moment(int n, std::span<const double> exponents) {
  require_dim(n);
  double total = 0.0;
  double log_prod = 0.0;
  for (double a : exponents) {
    if (a < 0.0) throw std::domain_error("dirichlet_moment: negative exponent");
    total += a;
    log_prod += specfun::log_gamma(1.0 + a);
  }
  return std::exp(specfun::log_gamma(static_cast<double>(n)) -
                  specfun::log_gamma(n + total) + log_prod);
}

}  // namespace haarlab::closedform
