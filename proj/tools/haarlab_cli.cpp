// Command-line front end: Monte Carlo estimates, closed-form evaluation,
// claim verification, tail-vs-bound comparisons and figure data, in JSON or
// CSV. All randomness is keyed by (--seed, sample index), so output bytes are
// identical for any --threads value.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "haarlab/closedform.hpp"
#include "haarlab/concentration.hpp"
#include "haarlab/montecarlo.hpp"
#include "haarlab/rng.hpp"

namespace {

namespace mc = haarlab::montecarlo;
namespace cf = haarlab::closedform;
namespace conc = haarlab::concentration;
using json = nlohmann::ordered_json;

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct CommonOptions {
  std::uint64_t seed = 12345;
  int threads = 0;
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--seed", opts.seed, "Master seed (64-bit)");
  cmd->add_option("--threads", opts.threads,
                  "Worker count; 0 = machine parallelism (does not change results)");
  cmd->add_option("--format", opts.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out_path, "Output path (default: stdout)");
}

void write_output(const CommonOptions& opts, const std::string& text) {
  if (opts.out_path.empty() || opts.out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + opts.out_path);
  }
  file << text;
}

// One output row: ordered (key, value) pairs; values are JSON scalars.
using Row = std::vector<std::pair<std::string, json>>;

json row_to_json(const Row& row) {
  json obj = json::object();
  for (const auto& [k, v] : row) obj[k] = v;
  return obj;
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      return quoted;
    }
    return s;
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

std::string rows_to_csv(const std::vector<Row>& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  for (std::size_t i = 0; i < rows.front().size(); ++i) {
    if (i) out << ',';
    out << rows.front()[i].first;
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_cell(row[i].second);
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const CommonOptions& opts, const std::vector<Row>& rows,
                   std::optional<bool> pass = std::nullopt) {
  if (opts.format == "csv") {
    return rows_to_csv(rows);
  }
  json doc = json::object();
  json records = json::array();
  for (const auto& row : rows) records.push_back(row_to_json(row));
  doc["records"] = std::move(records);
  if (pass) doc["pass"] = *pass;
  return doc.dump(2) + "\n";
}

mc::QuantitySpec make_spec(const std::string& quantity, int n,
                           std::optional<double> alpha) {
  const auto q = mc::parse_quantity(quantity);
  if (!q) {
    throw CLI::ValidationError("--quantity", "unknown quantity id: " + quantity);
  }
  mc::QuantitySpec spec{*q, n, alpha};
  if (mc::needs_alpha(*q) && !alpha) {
    throw CLI::ValidationError("--alpha", "alpha_purity requires --alpha");
  }
  return spec;
}

// Closed-form mean for a quantity, when the model provides one.
// `asymptotic` marks large-N references that are not exact at finite N.
struct ClosedMean {
  double value;
  bool asymptotic;
};

std::optional<ClosedMean> closed_mean(mc::Quantity q, int n,
                                      std::optional<double> alpha) {
  using mc::Quantity;
  switch (q) {
    case Quantity::kL1:
      return ClosedMean{cf::mean_l1_coherence(n).value, false};
    case Quantity::kL1Scaled:
      return ClosedMean{std::numbers::pi / 4.0, false};
    case Quantity::kRelativeEntropy:
      return ClosedMean{cf::mean_relative_entropy_coherence(n).value, false};
    case Quantity::kNegativity:
      return ClosedMean{cf::mean_negativity_reference(n).mean_negativity, true};
    case Quantity::kNegativityScaled:
      return ClosedMean{cf::mean_negativity_reference(n).mean_scaled, true};
    case Quantity::kSqTraceDistEntangled:
      return ClosedMean{cf::mean_negativity_reference(n).mean_sq_trace_dist, true};
    case Quantity::kSqHsDistEntangled:
      return ClosedMean{cf::mean_negativity_reference(n).mean_sq_hs_dist, true};
    case Quantity::kSqBuresDistEntangled:
      return ClosedMean{cf::mean_bures_sq_to_max_entangled(n).value, false};
    case Quantity::kSqTraceDistCoherent:
      return ClosedMean{cf::mean_sq_trace_dist_to_max_coherent(n).value, false};
    case Quantity::kSqHsDistCoherent:
      return ClosedMean{cf::mean_sq_trace_dist_to_max_coherent(n).value / 2.0, false};
    case Quantity::kSqBuresDistCoherent:
      return ClosedMean{cf::mean_bures_sq_to_max_coherent(n).value, false};
    case Quantity::kDiagTraceDist:
      return ClosedMean{cf::mean_diag_trace_distance(n).value, false};
    case Quantity::kAlphaPurity:
      return ClosedMean{cf::mean_alpha_purity(n, *alpha).value, false};
  }
  return std::nullopt;
}

// The paper's concentration bound matching a quantity, when one exists. The
// squared-distance functionals to the entangled set have no named theorem;
// they get the generic Levy bound with their proven Lipschitz constants
// (2 sqrt 2 for trace, sqrt 2 for HS and Bures) on the sphere of C^(N^2).
std::optional<conc::BoundReport> matching_bound(mc::Quantity q, int n, double eps) {
  using mc::Quantity;
  const auto generic = [n, eps](const char* id, double eta) {
    conc::BoundReport r;
    r.quantity = id;
    r.n = n;
    r.epsilon = eps;
    r.analytic_bound = conc::levy_bound({2 * n * n - 1, eta, eps});
    return r;
  };
  switch (q) {
    case Quantity::kL1:
      return conc::bound_l1_unscaled(n, eps);
    case Quantity::kL1Scaled:
      return conc::bound_l1_scaled(n, eps);
    case Quantity::kNegativityScaled:
      return conc::bound_negativity_scaled(n, eps);
    case Quantity::kSqTraceDistCoherent:
      return conc::bound_tr_dist_coherent(n, eps);
    case Quantity::kSqBuresDistCoherent:
      return conc::bound_bures_coherent(n, eps);
    case Quantity::kSqTraceDistEntangled:
      return generic("d2_tr_ent", 2.0 * std::numbers::sqrt2);
    case Quantity::kSqHsDistEntangled:
      return generic("d2_hs_ent", std::numbers::sqrt2);
    case Quantity::kSqBuresDistEntangled:
      return generic("d2_b_ent", std::numbers::sqrt2);
    default:
      return std::nullopt;
  }
}

std::uint64_t row_seed(std::uint64_t master, std::uint64_t row_id) {
  return haarlab::splitmix_fin(master ^ (0x9e3779b97f4a7c15ull * (row_id + 1)));
}

json opt_alpha(const std::optional<double>& alpha) {
  return alpha ? json(*alpha) : json(nullptr);
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  CommonOptions common;
  std::string quantity;
  int n = 0;
  std::optional<double> alpha;
  std::uint64_t samples = 100000;
};

Row estimate_row(const mc::EstimateReport& r) {
  return {{"quantity", r.quantity},
          {"n", r.n},
          {"alpha", opt_alpha(r.alpha)},
          {"samples", r.samples},
          {"seed", r.master_seed},
          {"mean", r.mean},
          {"variance", r.variance},
          {"stderr", r.standard_error}};
}

int run_estimate(const EstimateArgs& args) {
  const auto spec = make_spec(args.quantity, args.n, args.alpha);
  const auto report =
      mc::estimate(spec, args.samples, args.common.seed, args.common.threads);
  write_output(args.common, render(args.common, {estimate_row(report)}));
  return 0;
}

// -------------------------------------------------------------- closedform

struct ClosedFormArgs {
  CommonOptions common;
  std::string quantity;
  std::vector<int> ns;
  std::optional<double> alpha;
};

int run_closedform(const ClosedFormArgs& args) {
  const auto q = mc::parse_quantity(args.quantity);
  if (!q) {
    throw CLI::ValidationError("--quantity", "unknown quantity id: " + args.quantity);
  }
  if (mc::needs_alpha(*q) && !args.alpha) {
    throw CLI::ValidationError("--alpha", "alpha_purity requires --alpha");
  }
  std::vector<Row> rows;
  for (int n : args.ns) {
    const auto value = closed_mean(*q, n, args.alpha);
    if (!value) continue;
    Row row{{"quantity", args.quantity},
            {"n", n},
            {"alpha", opt_alpha(args.alpha)},
            {"closed_form", value->value},
            {"asymptotic", value->asymptotic}};
    if (*q == mc::Quantity::kL1) {
      row.emplace_back("variance", cf::variance_l1_coherence(n).value);
    } else if (*q == mc::Quantity::kL1Scaled) {
      row.emplace_back("variance", cf::variance_l1_coherence_scaled(n).value);
    } else if (*q == mc::Quantity::kAlphaPurity) {
      row.emplace_back("variance", cf::variance_alpha_purity(n, *args.alpha).value);
    }
    rows.push_back(std::move(row));
  }
  write_output(args.common, render(args.common, rows));
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  CommonOptions common;
  std::vector<std::string> claims;
  std::vector<int> ns;
  std::optional<std::uint64_t> samples;
};

struct VerifyJob {
  std::string claim;
  std::string quantity;
  std::string statistic;  // "mean" or "variance"
  int n;
  std::optional<double> alpha;
  std::uint64_t samples;
  double target;
  std::string rule;  // "3sigma", "rel5pct", "band0.01"
};

std::vector<VerifyJob> default_verify_grid() {
  std::vector<VerifyJob> jobs;
  auto mean_job = [&](std::string claim, std::string q, int n,
                      std::optional<double> alpha, std::uint64_t samples,
                      double target, std::string rule = "3sigma") {
    jobs.push_back({std::move(claim), std::move(q), "mean", n, alpha, samples,
                    target, std::move(rule)});
  };
  auto var_job = [&](std::string claim, std::string q, int n,
                     std::optional<double> alpha, std::uint64_t samples,
                     double target) {
    jobs.push_back({std::move(claim), std::move(q), "variance", n, alpha, samples,
                    target, "rel5pct"});
  };

  for (int n : {2, 8, 64}) {
    mean_job("mean_l1", "l1", n, std::nullopt, 100000,
             cf::mean_l1_coherence(n).value);
  }
  for (int n : {2, 8}) {
    var_job("var_l1", "l1", n, std::nullopt, 200000,
            cf::variance_l1_coherence(n).value);
  }
  for (int n : {2, 16, 128}) {
    mean_job("relent", "relent", n, std::nullopt, 50000,
             cf::mean_relative_entropy_coherence(n).value);
  }
  for (int n : {2, 8, 64}) {
    mean_job("d2_tr_coh", "d2_tr_coh", n, std::nullopt, 50000,
             cf::mean_sq_trace_dist_to_max_coherent(n).value);
    mean_job("d2_b_coh", "d2_b_coh", n, std::nullopt, 50000,
             cf::mean_bures_sq_to_max_coherent(n).value);
  }
  mean_job("d2_hs_coh", "d2_hs_coh", 8, std::nullopt, 50000,
           cf::mean_sq_trace_dist_to_max_coherent(8).value / 2.0);
  for (int n : {2, 3, 4}) {
    mean_job("bures_entangled", "d2_b_ent", n, std::nullopt, 20000,
             cf::mean_bures_sq_to_max_entangled(n).value);
  }
  mean_job("negativity", "negativity_scaled", 32, std::nullopt, 10000,
           cf::mean_negativity_reference(32).mean_scaled, "band0.01");
  mean_job("negativity", "d2_tr_ent", 32, std::nullopt, 10000,
           cf::mean_negativity_reference(32).mean_sq_trace_dist, "rel5pct");
  for (int n : {2, 4, 64}) {
    mean_job("diag_trace_dist", "diag_trace_dist", n, std::nullopt, 100000,
             cf::mean_diag_trace_distance(n).value);
  }
  for (const auto& [n, alpha] : std::vector<std::pair<int, double>>{
           {2, 2.0}, {8, 0.5}, {8, 2.0}, {64, 3.0}}) {
    mean_job("alpha_purity", "alpha_purity", n, alpha, 100000,
             cf::mean_alpha_purity(n, alpha).value);
    var_job("alpha_purity", "alpha_purity", n, alpha, 100000,
            cf::variance_alpha_purity(n, alpha).value);
  }
  return jobs;
}

int run_verify_collect(const VerifyArgs& args, std::vector<Row>& rows, bool& all_pass) {
  auto jobs = default_verify_grid();
  std::vector<VerifyJob> selected;
  std::vector<std::uint64_t> row_ids;
  for (std::uint64_t i = 0; i < jobs.size(); ++i) {
    const auto& job = jobs[i];
    if (!args.claims.empty() &&
        std::find(args.claims.begin(), args.claims.end(), job.claim) ==
            args.claims.end()) {
      continue;
    }
    if (!args.ns.empty() &&
        std::find(args.ns.begin(), args.ns.end(), job.n) == args.ns.end()) {
      continue;
    }
    selected.push_back(job);
    row_ids.push_back(i);
  }
  if (selected.empty()) {
    throw CLI::ValidationError("--claim", "no verify rows match the selection");
  }

  for (std::size_t i = 0; i < selected.size(); ++i) {
    auto job = selected[i];
    if (args.samples) job.samples = *args.samples;
    const std::uint64_t seed = row_seed(args.common.seed, row_ids[i]);
    const auto spec = make_spec(job.quantity, job.n, job.alpha);
    const auto report = mc::estimate(spec, job.samples, seed, args.common.threads);

    const double estimate_value =
        job.statistic == "variance" ? report.variance : report.mean;
    double z = 0.0;
    bool pass = false;
    if (job.rule == "3sigma") {
      z = report.standard_error > 0.0
              ? (report.mean - job.target) / report.standard_error
              : (report.mean == job.target ? 0.0 : INFINITY);
      pass = std::abs(z) <= 3.0;
    } else if (job.rule == "rel5pct") {
      const double rel = std::abs(estimate_value - job.target) /
                         (job.target != 0.0 ? std::abs(job.target) : 1.0);
      z = rel;
      pass = rel <= 0.05;
    } else {  // band0.01
      z = std::abs(report.mean - job.target);
      pass = z <= 0.01;
    }
    all_pass = all_pass && pass;
    rows.push_back({{"claim", job.claim},
                    {"quantity", job.quantity},
                    {"statistic", job.statistic},
                    {"n", job.n},
                    {"alpha", opt_alpha(job.alpha)},
                    {"samples", job.samples},
                    {"seed", seed},
                    {"estimate", estimate_value},
                    {"stderr", report.standard_error},
                    {"closed_form", job.target},
                    {"rule", job.rule},
                    {"z", z},
                    {"pass", pass}});
  }
  return all_pass ? 0 : kExitVerificationFailed;
}

int run_verify(const VerifyArgs& args) {
  std::vector<Row> rows;
  bool all_pass = true;
  const int code = run_verify_collect(args, rows, all_pass);
  write_output(args.common, render(args.common, rows, all_pass));
  return code;
}

// ------------------------------------------------------------------- tails

struct TailsArgs {
  CommonOptions common;
  std::string quantity;
  std::vector<int> ns;
  std::optional<double> alpha;
  std::vector<double> epsilons;
  std::uint64_t samples = 100000;
};

int run_tails_collect(const TailsArgs& args, std::vector<Row>& rows, bool& all_sound) {
  std::uint64_t row_id = 0;
  for (int n : args.ns) {
    const auto spec = make_spec(args.quantity, n, args.alpha);
    for (double eps : args.epsilons) {
      const std::uint64_t seed = row_seed(args.common.seed, row_id++);
      // Center on the exact closed-form mean where one exists; otherwise on
      // the run's own MC mean (the asymptotic references would bias the tail).
      const auto cm = closed_mean(spec.quantity, n, args.alpha);
      double center;
      bool self_centered = false;
      if (cm && !cm->asymptotic) {
        center = cm->value;
      } else {
        center = mc::estimate(spec, args.samples, seed, args.common.threads).mean;
        self_centered = true;
      }
      const auto tail =
          mc::estimate_tail(spec, center, eps, args.samples, seed, args.common.threads);
      const auto bound = matching_bound(spec.quantity, n, eps);
      const bool checked = bound && bound->analytic_bound < 1.0;
      bool sound = true;
      if (checked) {
        sound = tail.tail <= bound->analytic_bound + 3.0 * tail.tail_stderr;
        all_sound = all_sound && sound;
      }
      Row row{{"quantity", tail.quantity},
              {"n", n},
              {"alpha", opt_alpha(args.alpha)},
              {"epsilon", eps},
              {"center", center},
              {"self_centered", self_centered},
              {"samples", tail.samples},
              {"seed", seed},
              {"empirical_tail", tail.tail},
              {"tail_stderr", tail.tail_stderr},
              {"analytic_bound", bound ? json(bound->analytic_bound) : json(nullptr)},
              {"levy_reconstruction", bound && bound->levy_reconstruction
                                          ? json(*bound->levy_reconstruction)
                                          : json(nullptr)},
              {"checked", checked},
              {"sound", sound}};
      if (spec.quantity == mc::Quantity::kL1Scaled) {
        row.emplace_back("chebyshev_bound",
                         conc::chebyshev_bound(
                             cf::variance_l1_coherence_scaled(n).value, eps));
      }
      rows.push_back(std::move(row));
    }
  }
  return all_sound ? 0 : kExitVerificationFailed;
}

int run_tails(const TailsArgs& args) {
  std::vector<Row> rows;
  bool all_sound = true;
  const int code = run_tails_collect(args, rows, all_sound);
  write_output(args.common, render(args.common, rows, all_sound));
  return code;
}

// ------------------------------------------------------------------ figure

struct FigureArgs {
  CommonOptions common;
  int kappa_min = 1;
  int kappa_max = 6;
  int mc_max_kappa = 5;
  std::uint64_t samples = 20000;
};

int run_figure_collect(const FigureArgs& args, std::vector<Row>& rows) {
  if (args.kappa_min < 0 || args.kappa_max < args.kappa_min || args.kappa_max > 10) {
    throw CLI::ValidationError("--kappa", "supported range is 0..10");
  }
  for (int kappa = args.kappa_min; kappa <= args.kappa_max; ++kappa) {
    const int n = 1 << kappa;
    const double closed = cf::mean_bures_sq_to_max_entangled(n).value;
    const std::uint64_t seed = row_seed(args.common.seed, kappa);
    Row row{{"kappa", kappa}, {"n", n}, {"closed_form", closed}};
    if (kappa <= args.mc_max_kappa && n >= 2) {
      const auto report = mc::estimate({mc::Quantity::kSqBuresDistEntangled, n, {}},
                                       args.samples, seed, args.common.threads);
      row.emplace_back("mc_mean", report.mean);
      row.emplace_back("mc_stderr", report.standard_error);
      row.emplace_back("samples", report.samples);
    } else {
      row.emplace_back("mc_mean", nullptr);
      row.emplace_back("mc_stderr", nullptr);
      row.emplace_back("samples", nullptr);
    }
    row.emplace_back("seed", seed);
    rows.push_back(std::move(row));
  }
  return 0;
}

int run_figure(const FigureArgs& args) {
  std::vector<Row> rows;
  run_figure_collect(args, rows);
  write_output(args.common, render(args.common, rows));
  return 0;
}

// ------------------------------------------------------------------ report

int run_report(const CommonOptions& common) {
  bool all_pass = true;

  std::vector<Row> verify_rows;
  VerifyArgs verify_args;
  verify_args.common = common;
  run_verify_collect(verify_args, verify_rows, all_pass);

  std::vector<Row> tail_rows;
  bool tails_sound = true;
  for (const char* quantity : {"l1_scaled", "d2_tr_coh", "d2_b_coh"}) {
    TailsArgs tails_args;
    tails_args.common = common;
    tails_args.quantity = quantity;
    tails_args.ns = {64};
    tails_args.epsilons = {0.05, 0.1};
    tails_args.samples = 50000;
    run_tails_collect(tails_args, tail_rows, tails_sound);
  }
  all_pass = all_pass && tails_sound;

  std::vector<Row> figure_rows;
  FigureArgs figure_args;
  figure_args.common = common;
  run_figure_collect(figure_args, figure_rows);

  if (common.format == "csv") {
    // The three sections have different columns; emit them as three CSV
    // blocks separated by blank lines.
    std::string text = rows_to_csv(verify_rows);
    text += "\n" + rows_to_csv(tail_rows);
    text += "\n" + rows_to_csv(figure_rows);
    write_output(common, text);
  } else {
    json doc = json::object();
    json verify = json::array();
    for (const auto& r : verify_rows) verify.push_back(row_to_json(r));
    json tails = json::array();
    for (const auto& r : tail_rows) tails.push_back(row_to_json(r));
    json figure = json::array();
    for (const auto& r : figure_rows) figure.push_back(row_to_json(r));
    doc["verify"] = std::move(verify);
    doc["tails"] = std::move(tails);
    doc["figure"] = std::move(figure);
    doc["pass"] = all_pass;
    write_output(common, doc.dump(2) + "\n");
  }
  return all_pass ? 0 : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "haarlab: averages, variances and concentration bounds of coherence and "
      "entanglement quantities over Haar-random pure states"};
  app.require_subcommand(1);

  EstimateArgs estimate_args;
  auto* cmd_estimate = app.add_subcommand(
      "estimate", "Monte Carlo estimate of one quantity (mean/variance/stderr)");
  cmd_estimate->add_option("--quantity", estimate_args.quantity,
                           "Quantity id (l1, l1_scaled, relent, negativity, "
                           "negativity_scaled, d2_tr_ent, d2_hs_ent, d2_b_ent, "
                           "d2_tr_coh, d2_hs_coh, d2_b_coh, diag_trace_dist, "
                           "alpha_purity)")
      ->required();
  cmd_estimate->add_option("--n", estimate_args.n, "Hilbert space dimension N")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_estimate->add_option("--alpha", estimate_args.alpha, "Exponent for alpha_purity");
  cmd_estimate->add_option("--samples", estimate_args.samples, "Sample count")
      ->check(CLI::PositiveNumber);
  add_common(cmd_estimate, estimate_args.common);

  ClosedFormArgs closedform_args;
  auto* cmd_closedform = app.add_subcommand(
      "closedform", "Analytic value(s) for a quantity as a function of N");
  cmd_closedform->add_option("--quantity", closedform_args.quantity, "Quantity id")
      ->required();
  cmd_closedform->add_option("--n", closedform_args.ns, "Dimension list, e.g. 2,8,64")
      ->required()
      ->delimiter(',');
  cmd_closedform->add_option("--alpha", closedform_args.alpha,
                             "Exponent for alpha_purity");
  add_common(cmd_closedform, closedform_args.common);

  VerifyArgs verify_args;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Closed form vs Monte Carlo, one row per claim; exit 1 on failure");
  cmd_verify->add_option("--claim", verify_args.claims,
                         "Claim subset (mean_l1, var_l1, relent, d2_tr_coh, "
                         "d2_b_coh, d2_hs_coh, bures_entangled, negativity, "
                         "diag_trace_dist, alpha_purity)")
      ->delimiter(',');
  cmd_verify->add_option("--n", verify_args.ns, "Restrict to these N values")
      ->delimiter(',');
  cmd_verify->add_option("--samples", verify_args.samples,
                         "Override per-row sample counts");
  add_common(cmd_verify, verify_args.common);

  TailsArgs tails_args;
  auto* cmd_tails = app.add_subcommand(
      "tails", "Empirical tail frequencies vs analytic concentration bounds");
  cmd_tails->add_option("--quantity", tails_args.quantity, "Quantity id")->required();
  cmd_tails->add_option("--n", tails_args.ns, "Dimension list")
      ->required()
      ->delimiter(',');
  cmd_tails->add_option("--alpha", tails_args.alpha, "Exponent for alpha_purity");
  cmd_tails->add_option("--epsilon", tails_args.epsilons, "Epsilon list")
      ->required()
      ->delimiter(',');
  cmd_tails->add_option("--samples", tails_args.samples, "Sample count per point")
      ->check(CLI::PositiveNumber);
  add_common(cmd_tails, tails_args.common);

  FigureArgs figure_args;
  auto* cmd_figure = app.add_subcommand(
      "figure",
      "Average squared Bures distance to the maximally entangled set vs kappa "
      "(N = 2^kappa): closed form plus optional MC column");
  cmd_figure->add_option("--kappa-min", figure_args.kappa_min, "Smallest kappa");
  cmd_figure->add_option("--kappa-max", figure_args.kappa_max, "Largest kappa");
  cmd_figure->add_option("--mc-max-kappa", figure_args.mc_max_kappa,
                         "Largest kappa that also gets an MC column");
  cmd_figure->add_option("--samples", figure_args.samples, "MC samples per kappa")
      ->check(CLI::PositiveNumber);
  add_common(cmd_figure, figure_args.common);

  CommonOptions report_common;
  auto* cmd_report = app.add_subcommand(
      "report", "Full verify grid + default tails grid + figure in one document");
  add_common(cmd_report, report_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_estimate->parsed()) return run_estimate(estimate_args);
    if (cmd_closedform->parsed()) return run_closedform(closedform_args);
    if (cmd_verify->parsed()) return run_verify(verify_args);
    if (cmd_tails->parsed()) return run_tails(tails_args);
    if (cmd_figure->parsed()) return run_figure(figure_args);
    if (cmd_report->parsed()) return run_report(report_common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
