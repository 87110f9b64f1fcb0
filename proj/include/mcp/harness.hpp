#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "mcp/signals.hpp"
#include "mcp/solver.hpp"

namespace mcp {

// Invalid experiment configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  SignalClassSpec signal_class = SparseClass{2};
  std::size_t n = 256;
  // Resolution: m if set, else ceil(alpha log2 n), else ceil(log2 n).
  std::optional<int> m;
  std::optional<double> alpha;
  std::vector<std::size_t> d_grid{40};
  // Mismatch scans only; empty means {n}.
  std::vector<std::size_t> n_grid;
  // Requested epsilon_n values for mismatch scans; empty means the class's
  // own approximation error bound.
  std::vector<double> epsilon_grid;
  // Complexity per bit of resolution; defaults to the class dl bound / m.
  std::optional<double> kappa;
  double delta = 1.0;
  double tau = kDefaultTau;
  double t = 1.0;
  std::size_t trials = 200;
  std::uint64_t master_seed = 1;
  // Defaults to predicted_error_bound (exact classes) or the mismatch chain
  // bound (approximate classes).
  std::optional<double> success_threshold;
  // Overrides difference_budget(kappa, delta, m).
  std::optional<std::size_t> budget_bits;
  // Subinterval width for the smooth class.
  double smooth_r = 0.25;
  bool check_e1 = true;
  bool include_literals = false;
  std::uint64_t candidate_cap = kDefaultCandidateCap;
  unsigned workers = 0;
  bool wall_time_in_csv = false;

  int resolved_m(std::size_t n_value) const;
  // Throws ConfigError.
  void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& config);

// One (trial, cell) outcome. success == (status == "ok" && l2_error <=
// threshold); every other flag is likewise recomputable from the fields.
struct ExperimentRecord {
  std::string signal_class;
  std::size_t n = 0;
  int m = 0;
  std::size_t d = 0;
  std::size_t cell = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double kappa = 0.0;
  double delta = 0.0;
  double tau = 0.0;
  double t = 0.0;
  std::size_t budget_bits = 0;
  double epsilon = 0.0;  // tolerance fed to the solver (0 for exact classes)
  double approx_error = 0.0;
  double approx_epsilon = 0.0;
  bool approx_within = true;    // approx_error <= approx_epsilon
  bool epsilon_covers = true;   // approx_epsilon <= epsilon
  std::string status;           // ok | infeasible | resource_limit
  bool success = false;
  bool exact = false;  // recovered vector equals [x_o]_m
  double l2_error = 0.0;
  double threshold = 0.0;
  double predicted_bound = 0.0;
  std::size_t dl_bits = 0;
  double residual = 0.0;
  double eta = 0.0;
  double sigma_max = 0.0;
  bool e1_pass = false;
  std::uint64_t e1_checked = 0;
  bool e2_pass = false;
  std::uint64_t candidates = 0;
  std::string codec;
  double wall_ms = 0.0;
};

// Error bound for the tolerance-constrained program with sigma_max replaced
// by its high-probability ceiling s = 1 + sqrt(n/d) + t:
//   (s/tau + 1) sqrt(n 2^(-2m+1)) + 2 s epsilon / tau + epsilon.
double mismatch_chain_bound(std::size_t n, std::size_t d, int m, double tau, double t,
                            double epsilon);

// Ordered by (cell, trial).
std::vector<ExperimentRecord> run_phase_scan(const ExperimentConfig& config);
std::vector<ExperimentRecord> run_mismatch_scan(const ExperimentConfig& config);

struct CellSummary {
  std::size_t n = 0;
  std::size_t d = 0;
  double epsilon = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t exact = 0;
  std::size_t conditioned = 0;   // trials with e1 and e2 passing
  std::size_t violations = 0;    // conditioned trials that failed
  double success_rate = 0.0;
  double median_error = 0.0;
};

// One summary per cell, in cell order.
std::vector<CellSummary> summarize(std::span<const ExperimentRecord> records);

struct CorollaryReport {
  std::size_t n = 0;
  int m = 0;
  std::size_t d = 0;
  double alpha = 0.0;
  double kappa = 0.0;
  double error_bound = 0.0;
  double failure_bound = 0.0;
  std::size_t failures = 0;
  double empirical = 0.0;
  double sigma = 0.0;
  bool pass = false;
  std::vector<ExperimentRecord> records;
};

// m = ceil(alpha log2 n), kappa = sparse_dl_bound(k, n, m) / m,
// d = ceil(2 alpha kappa log2 n); failure means l2_error above the
// corollary bound. Passes when the failure rate is at most n^(-alpha kappa)
// + 3 sigma.
CorollaryReport run_corollary_check(std::size_t n, double alpha, SparseClass kappa_class,
                                    std::size_t trials, std::uint64_t seed,
                                    const ExperimentConfig& base = {});

struct SigmaCell {
  std::size_t d = 0;
  std::size_t n = 0;
  double t = 0.0;
};

struct LemmaGrid {
  std::vector<std::size_t> chi_d{10, 50, 100};
  std::vector<double> chi_tau{0.2, 0.5, 0.8};
  std::size_t chi_trials = 100000;
  std::vector<SigmaCell> sigma_cells{{10, 10, 0.5}, {40, 256, 1.0}};
  std::size_t sigma_trials = 10000;
};

struct LemmaRow {
  std::string kind;  // chi_square | sigma_max
  std::size_t d = 0;
  std::size_t n = 0;
  double parameter = 0.0;  // tau or t
  MonteCarloCheck check;
};

struct LemmaReport {
  std::vector<LemmaRow> rows;
  bool all_pass = false;
};

LemmaReport run_lemma_suite(const LemmaGrid& grid, std::uint64_t seed, unsigned workers = 0);

// CSV with one header line and RFC-4180 quoting. NaN prints as an empty field.
void write_records_csv(std::ostream& out, std::span<const ExperimentRecord> records,
                       bool include_wall_time = false);
void write_summary_csv(std::ostream& out, std::span<const CellSummary> cells);
void write_lemma_csv(std::ostream& out, const LemmaReport& report);
void write_corollary_csv(std::ostream& out, const CorollaryReport& report);

std::string csv_quote(const std::string& field);
std::string format_double(double v);

// SHA-1 of "blob <size>\0<content>", as git computes object ids.
std::string git_blob_sha1(std::span<const std::uint8_t> content);
std::string git_blob_sha1(const std::string& content);

// Run manifest: config echo plus the content hash of each output file.
nlohmann::json make_manifest(const std::string& command, const nlohmann::json& config,
                             const std::vector<std::string>& output_paths, double wall_seconds);

}  // namespace mcp
