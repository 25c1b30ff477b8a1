#include "haarlab/montecarlo.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "haarlab/distances.hpp"
#include "haarlab/measures.hpp"
#include "haarlab/states.hpp"

namespace haarlab::montecarlo {

namespace {

struct IdEntry {
  std::string_view id;
  Quantity quantity;
};

constexpr IdEntry kIds[] = {
    {"l1", Quantity::kL1},
    {"l1_scaled", Quantity::kL1Scaled},
    {"relent", Quantity::kRelativeEntropy},
    {"negativity", Quantity::kNegativity},
    {"negativity_scaled", Quantity::kNegativityScaled},
    {"d2_tr_ent", Quantity::kSqTraceDistEntangled},
    {"d2_hs_ent", Quantity::kSqHsDistEntangled},
    {"d2_b_ent", Quantity::kSqBuresDistEntangled},
    {"d2_tr_coh", Quantity::kSqTraceDistCoherent},
    {"d2_hs_coh", Quantity::kSqHsDistCoherent},
    {"d2_b_coh", Quantity::kSqBuresDistCoherent},
    {"diag_trace_dist", Quantity::kDiagTraceDist},
    {"alpha_purity", Quantity::kAlphaPurity},
};

void validate(const QuantitySpec& spec) {
  if (spec.n < 1) {
    throw std::invalid_argument("montecarlo: dimension must be >= 1");
  }
  if ((spec.quantity == Quantity::kL1Scaled ||
       spec.quantity == Quantity::kNegativityScaled) &&
      spec.n < 2) {
    throw std::invalid_argument("montecarlo: scaled quantities need N >= 2");
  }
  if (needs_alpha(spec.quantity)) {
    if (!spec.alpha || !(*spec.alpha > 0.0)) {
      throw std::invalid_argument("montecarlo: alpha_purity needs alpha > 0");
    }
  }
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Contiguous index blocks; workers pull whole blocks. The merge is exact, so
// the block size only affects scheduling, never the result.
constexpr std::uint64_t kBlockSize = 4096;

template <typename PerSample>
void run_samples(std::uint64_t samples, int threads, PerSample&& per_sample) {
  const int workers = resolve_threads(threads);
  std::atomic<std::uint64_t> next_block{0};
  auto drain = [&](int worker) {
    for (;;) {
      const std::uint64_t block = next_block.fetch_add(1);
      const std::uint64_t begin = block * kBlockSize;
      if (begin >= samples) break;
      const std::uint64_t end = std::min(samples, begin + kBlockSize);
      for (std::uint64_t i = begin; i < end; ++i) {
        per_sample(worker, i);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) {
    pool.emplace_back(drain, w);
  }
  drain(0);
  for (auto& t : pool) t.join();
}

}  // namespace

std::optional<Quantity> parse_quantity(std::string_view id) {
  for (const auto& e : kIds) {
    if (e.id == id) return e.quantity;
  }
  return std::nullopt;
}

std::string_view to_string(Quantity q) {
  for (const auto& e : kIds) {
    if (e.quantity == q) return e.id;
  }
  return "unknown";
}

bool is_bipartite(Quantity q) {
  switch (q) {
    case Quantity::kNegativity:
    case Quantity::kNegativityScaled:
    case Quantity::kSqTraceDistEntangled:
    case Quantity::kSqHsDistEntangled:
    case Quantity::kSqBuresDistEntangled:
      return true;
    default:
      return false;
  }
}

bool needs_alpha(Quantity q) { return q == Quantity::kAlphaPurity; }

double evaluate_quantity(const QuantitySpec& spec, RngStream& stream) {
  switch (spec.quantity) {
    case Quantity::kL1:
      return l1_coherence(haar_sample(spec.n, stream)).value;
    case Quantity::kL1Scaled:
      return l1_coherence(haar_sample(spec.n, stream)).value / (spec.n - 1.0);
    case Quantity::kRelativeEntropy:
      return relative_entropy_coherence(haar_sample(spec.n, stream)).value;
    case Quantity::kNegativity:
      return negativity(schmidt_spectrum(haar_sample_bipartite(spec.n, stream))).value;
    case Quantity::kNegativityScaled:
      return negativity(schmidt_spectrum(haar_sample_bipartite(spec.n, stream))).scaled();
    case Quantity::kSqTraceDistEntangled: {
      const auto d =
          distance_to_max_entangled(schmidt_spectrum(haar_sample_bipartite(spec.n, stream)));
      return d.trace * d.trace;
    }
    case Quantity::kSqHsDistEntangled: {
      const auto d =
          distance_to_max_entangled(schmidt_spectrum(haar_sample_bipartite(spec.n, stream)));
      return d.hilbert_schmidt * d.hilbert_schmidt;
    }
    case Quantity::kSqBuresDistEntangled: {
      const auto d =
          distance_to_max_entangled(schmidt_spectrum(haar_sample_bipartite(spec.n, stream)));
      return d.bures * d.bures;
    }
    case Quantity::kSqTraceDistCoherent: {
      const auto d = distance_to_max_coherent(haar_sample(spec.n, stream));
      return d.trace * d.trace;
    }
    case Quantity::kSqHsDistCoherent: {
      const auto d = distance_to_max_coherent(haar_sample(spec.n, stream));
      return d.hilbert_schmidt * d.hilbert_schmidt;
    }
    case Quantity::kSqBuresDistCoherent: {
      const auto d = distance_to_max_coherent(haar_sample(spec.n, stream));
      return d.bures * d.bures;
    }
    case Quantity::kDiagTraceDist:
      return diag_trace_distance_to_maxmixed(diagonal_part(haar_sample(spec.n, stream)));
    case Quantity::kAlphaPurity:
      return alpha_classical_purity(diagonal_part(haar_sample(spec.n, stream)),
                                    *spec.alpha);
  }
  throw std::invalid_argument("montecarlo: unknown quantity");
}

MomentAccumulator accumulate(const QuantitySpec& spec, std::uint64_t samples,
                             std::uint64_t master_seed, int threads) {
  validate(spec);
  if (samples < 1) {
    throw std::invalid_argument("montecarlo: need at least one sample");
  }
  const int workers = resolve_threads(threads);
  std::vector<MomentAccumulator> partial(workers);
  run_samples(samples, threads, [&](int worker, std::uint64_t i) {
    RngStream stream = RngStream::derive(master_seed, i);
    partial[worker].add(evaluate_quantity(spec, stream));
  });
  MomentAccumulator total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

EstimateReport estimate(const QuantitySpec& spec, std::uint64_t samples,
                        std::uint64_t master_seed, int threads) {
  const auto start = std::chrono::steady_clock::now();
  const MomentAccumulator acc = accumulate(spec, samples, master_seed, threads);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {std::string(to_string(spec.quantity)),
          spec.n,
          needs_alpha(spec.quantity) ? spec.alpha : std::nullopt,
          acc.count(),
          acc.mean(),
          acc.variance(),
          acc.standard_error(),
          master_seed,
          elapsed.count()};
}

TailReport estimate_tail(const QuantitySpec& spec, double center, double epsilon,
                         std::uint64_t samples, std::uint64_t master_seed,
                         int threads) {
  validate(spec);
  if (samples < 1) {
    throw std::invalid_argument("montecarlo: need at least one sample");
  }
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("montecarlo: epsilon must be positive");
  }
  const int workers = resolve_threads(threads);
  std::vector<std::uint64_t> hits(workers, 0);
  run_samples(samples, threads, [&](int worker, std::uint64_t i) {
    RngStream stream = RngStream::derive(master_seed, i);
    if (std::abs(evaluate_quantity(spec, stream) - center) > epsilon) {
      ++hits[worker];
    }
  });
  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  const double p = static_cast<double>(total) / static_cast<double>(samples);
  return {std::string(to_string(spec.quantity)),
          spec.n,
          needs_alpha(spec.quantity) ? spec.alpha : std::nullopt,
          center,
          epsilon,
          samples,
          p,
          std::sqrt(p * (1.0 - p) / static_cast<double>(samples)),
          master_seed};
}

}  // namespace haarlab::montecarlo
