#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "haarlab/accumulator.hpp"
#include "haarlab/rng.hpp"

namespace haarlab::montecarlo {

// The closed set of estimable quantities. The identifier fixes both the
// sampler (single-system vs bipartite Haar state) and the functional.
enum class Quantity {
  kL1,
  kL1Scaled,
  kRelativeEntropy,
  kNegativity,
  kNegativityScaled,
  kSqTraceDistEntangled,
  kSqHsDistEntangled,
  kSqBuresDistEntangled,
  kSqTraceDistCoherent,
  kSqHsDistCoherent,
  kSqBuresDistCoherent,
  kDiagTraceDist,
  kAlphaPurity,
};

std::optional<Quantity> parse_quantity(std::string_view id);
std::string_view to_string(Quantity q);
bool is_bipartite(Quantity q);
bool needs_alpha(Quantity q);

struct QuantitySpec {
  Quantity quantity;
  int n = 0;
  std::optional<double> alpha;
};

struct EstimateReport {
  std::string quantity;
  int n = 0;
  std::optional<double> alpha;
  std::uint64_t samples = 0;
  double mean = 0.0;
  double variance = 0.0;        // unbiased
  double standard_error = 0.0;  // sqrt(variance / samples)
  std::uint64_t master_seed = 0;
  double elapsed_seconds = 0.0;
};

struct TailReport {
  std::string quantity;
  int n = 0;
  std::optional<double> alpha;
  double center = 0.0;
  double epsilon = 0.0;
  std::uint64_t samples = 0;
  double tail = 0.0;         // fraction with |x - center| > epsilon
  double tail_stderr = 0.0;  // binomial
  std::uint64_t master_seed = 0;
};

/// The quantity functional on one sample drawn from the given stream.
double evaluate_quantity(const QuantitySpec& spec, RngStream& stream);

/// Exact accumulator over `samples` i.i.d. samples; sample i always uses the
/// substream derive(master_seed, i), so the result is bit-identical for any
/// worker count. threads = 0 means hardware concurrency.
MomentAccumulator accumulate(const QuantitySpec& spec, std::uint64_t samples,
                             std::uint64_t master_seed, int threads = 0);

EstimateReport estimate(const QuantitySpec& spec, std::uint64_t samples,
                        std::uint64_t master_seed, int threads = 0);

TailReport estimate_tail(const QuantitySpec& spec, double center, double epsilon,
                         std::uint64_t samples, std::uint64_t master_seed,
                         int threads = 0);

}  // namespace haarlab::montecarlo
