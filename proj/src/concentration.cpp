#include "haarlab/concentration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace haarlab::concentration {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLevyDenom = 9.0 * kPi * kPi * kPi * std::numbers::ln2;

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

double capped(double exponent) { return std::min(2.0, 2.0 * std::exp(-exponent)); }

BoundReport make_report(std::string quantity, int n, double epsilon, double bound,
                        double reconstruction) {
  BoundReport report;
  report.quantity = std::move(quantity);
  report.n = n;
  report.epsilon = epsilon;
  report.analytic_bound = bound;
  report.levy_reconstruction = reconstruction;
  return report;
}

}  // namespace

double levy_bound(const LevyParameters& params) {
  require(params.sphere_dim_k > 0, "levy_bound: sphere dimension must be positive");
  require(params.lipschitz_eta > 0.0, "levy_bound: Lipschitz constant must be positive");
  require(params.epsilon > 0.0, "levy_bound: epsilon must be positive");
  const double eta2 = params.lipschitz_eta * params.lipschitz_eta;
  return capped((params.sphere_dim_k + 1.0) * params.epsilon * params.epsilon /
                (kLevyDenom * eta2));
}

BoundReport bound_l1_unscaled(int n, double epsilon) {
  require(n >= 2, "bound_l1_unscaled: N must be >= 2");
  require(epsilon > 0.0, "bound_l1_unscaled: epsilon must be positive");
  const double bound = capped(4.0 * epsilon * epsilon / (kLevyDenom * n));
  return make_report("l1", n, epsilon, bound,
                     levy_bound({2 * n - 1, n / std::numbers::sqrt2, epsilon}));
}

BoundReport bound_l1_scaled(int n, double epsilon) {
  require(n >= 2, "bound_l1_scaled: N must be >= 2");
  require(epsilon > 0.0, "bound_l1_scaled: epsilon must be positive");
  const double m = n - 1.0;
  const double bound = capped(4.0 * m * m * epsilon * epsilon / (kLevyDenom * n));
  return make_report("l1_scaled", n, epsilon, bound,
                     levy_bound({2 * n - 1, n / (std::numbers::sqrt2 * m), epsilon}));
}

BoundReport bound_negativity_scaled(int n, double epsilon) {
  require(n >= 2, "bound_negativity_scaled: N must be >= 2");
  require(epsilon > 0.0, "bound_negativity_scaled: epsilon must be positive");
  const double m = n - 1.0;
  const double bound = capped(16.0 * m * m * epsilon * epsilon / kLevyDenom);
  return make_report("negativity_scaled", n, epsilon, bound,
                     levy_bound({2 * n * n - 1, n / (std::numbers::sqrt2 * m), epsilon}));
}

BoundReport bound_tr_dist_coherent(int n, double epsilon) {
  require(n >= 1, "bound_tr_dist_coherent: N must be >= 1");
  require(epsilon > 0.0, "bound_tr_dist_coherent: epsilon must be positive");
  const double bound = capped(n * epsilon * epsilon / (4.0 * kLevyDenom));
  return make_report("d2_tr_coh", n, epsilon, bound,
                     levy_bound({2 * n - 1, 2.0 * std::numbers::sqrt2, epsilon}));
}

BoundReport bound_bures_coherent(int n, double epsilon) {
  require(n >= 1, "bound_bures_coherent: N must be >= 1");
  require(epsilon > 0.0, "bound_bures_coherent: epsilon must be positive");
  const double bound = capped(n * epsilon * epsilon / kLevyDenom);
  return make_report("d2_b_coh", n, epsilon, bound,
                     levy_bound({2 * n - 1, std::numbers::sqrt2, epsilon}));
}

double chebyshev_bound(double variance, double epsilon) {
  require(variance >= 0.0, "chebyshev_bound: variance must be non-negative");
  require(epsilon > 0.0, "chebyshev_bound: epsilon must be positive");
  return std::min(1.0, variance / (epsilon * epsilon));
}

TailEstimate empirical_tail(std::span<const double> samples, double center,
                            double epsilon) {
  if (samples.empty()) {
    throw std::invalid_argument("empirical_tail: empty sample set");
  }
  std::uint64_t hits = 0;
  for (double x : samples) {
    if (std::abs(x - center) > epsilon) ++hits;
  }
  const double count = static_cast<double>(samples.size());
  const double p = static_cast<double>(hits) / count;
  return {p, std::sqrt(p * (1.0 - p) / count), samples.size()};
}

}  // namespace haarlab::concentration
