#include "mcp/harness.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

#include "mcp/parallel.hpp"
#include "mcp/rng.hpp"

namespace mcp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Cell {
  std::size_t n = 0;
  std::size_t d = 0;
  std::optional<double> epsilon;
};

double sigma_ceiling(std::size_t n, std::size_t d, double t) {
  return 1.0 + std::sqrt(static_cast<double>(n) / static_cast<double>(d)) + t;
}

std::size_t lp_sparsity(std::size_t n, double p) {
  return static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), p / 2.0) - 1e-12));
}

// Signal draw plus everything the solver needs to know about its class.
struct Instance {
  Eigen::VectorXd x_o;
  bool tolerant = false;
  double approx_error = kNaN;
  double approx_epsilon = kNaN;
  CodebookSpec codebook;
  double class_dl_bits = 0.0;  // kappa * m for the class
};

Instance draw_instance(const ExperimentConfig& cfg, std::size_t n, int m, Rng& rng) {
  Instance inst;
  std::visit(
      overloaded{
          [&](const SparseClass& c) {
            inst.x_o = gen_sparse(n, c.k, rng);
            inst.codebook.sparse = true;
            inst.class_dl_bits = sparse_dl_bound(c.k, n, m);
          },
          [&](const PiecewisePolyClass& c) {
            inst.x_o = gen_piecewise_poly(n, c.Q, c.N, rng, pp_coefficient_bits(m, c.N)).samples;
            inst.codebook.piecewise_poly = true;
            inst.codebook.pp_max_degree = c.N;
            inst.class_dl_bits = pp_dl_bound(c.Q, c.N, n, m);
          },
          [&](const LpBallClass& c) {
            inst.x_o = gen_lp_ball(n, c.p, rng);
            const std::size_t k = std::min(n, lp_sparsity(n, c.p));
            const auto approx = top_k_approx(inst.x_o, k, c.p);
            inst.tolerant = true;
            inst.approx_error = (inst.x_o - approx.x_tilde).norm();
            inst.approx_epsilon = approx.epsilon;
            inst.codebook.sparse = true;
            inst.class_dl_bits = sparse_dl_bound(k, n, m);
          },
          [&](const SmoothClass& c) {
            // (1 - cos(w t + phase)) / 2 has every derivative of order
            // beta + 1 bounded by w^(beta+1) / 2 = gamma.
            const double w = std::pow(2.0 * c.gamma, 1.0 / (c.beta + 1));
            const double phase = 2.0 * std::numbers::pi * rng.uniform();
            inst.x_o.resize(static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < n; ++i) {
              const double t = static_cast<double>(i) / static_cast<double>(n);
              inst.x_o(static_cast<Eigen::Index>(i)) = 0.5 * (1.0 - std::cos(w * t + phase));
            }
            const auto approx = piecewise_poly_fit(inst.x_o, cfg.smooth_r, c.beta, c.gamma);
            const auto& cls = std::get<PiecewisePolyClass>(approx.dl_class);
            inst.tolerant = true;
            inst.approx_error = (inst.x_o - approx.x_tilde).norm();
            inst.approx_epsilon = approx.epsilon;
            inst.codebook.piecewise_poly = true;
            inst.codebook.pp_max_degree = c.beta;
            inst.class_dl_bits = pp_dl_bound(cls.Q, cls.N, n, m);
          },
      },
      cfg.signal_class);
  inst.codebook.literal = cfg.include_literals;
  return inst;
}

ExperimentRecord run_cell(const ExperimentConfig& cfg, const Cell& cell, std::size_t cell_index,
                          std::size_t trial) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.signal_class = describe(cfg.signal_class);
  rec.n = cell.n;
  rec.m = cfg.resolved_m(cell.n);
  rec.d = cell.d;
  rec.cell = cell_index;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.master_seed, trial, cell_index);
  rec.delta = cfg.delta;
  rec.tau = cfg.tau;
  rec.t = cfg.t;

  Rng rng(derive_seed(rec.seed, 0));
  const Instance inst = draw_instance(cfg, cell.n, rec.m, rng);
  rec.kappa = cfg.kappa ? *cfg.kappa : inst.class_dl_bits / rec.m;
  rec.budget_bits =
      cfg.budget_bits ? *cfg.budget_bits : difference_budget(rec.kappa, cfg.delta, rec.m).bits;
  rec.approx_error = inst.approx_error;
  rec.approx_epsilon = inst.approx_epsilon;
  if (inst.tolerant) {
    rec.epsilon = cell.epsilon ? *cell.epsilon : inst.approx_epsilon;
    rec.approx_within = inst.approx_error <= inst.approx_epsilon * (1.0 + 1e-12);
    rec.epsilon_covers = inst.approx_epsilon <= rec.epsilon;
  }

  const MeasurementEnsemble ens = sample_ensemble(cell.d, cell.n, derive_seed(rec.seed, 1));
  const Eigen::VectorXd y = ens.A * inst.x_o;
  rec.sigma_max = ens.sigma_max;
  rec.e2_pass = ens.sigma_max <= sigma_ceiling(cell.n, cell.d, cfg.t);
  rec.predicted_bound = predicted_error_bound(cell.n, cell.d, rec.m, cfg.tau, cfg.t);

  // Clamp guards values a rounding step above 1 before truncation.
  const QuantizedVector xq = quantize_vector(Eigen::VectorXd(inst.x_o.cwiseMax(0.0).cwiseMin(1.0)), rec.m);
  const Eigen::VectorXd xq_real = xq.to_real();
  const Eigen::VectorXd A_xq = ens.A * xq_real;

  SolverConfig solver;
  solver.codebook = inst.codebook;
  solver.m = rec.m;
  solver.candidate_cap = cfg.candidate_cap;
  solver.tau = cfg.tau;
  solver.t = cfg.t;
  bool e1 = true;
  std::uint64_t e1_checked = 0;
  if (cfg.check_e1) {
    solver.observer = [&](const Eigen::VectorXd& c, bool) {
      const Eigen::VectorXd diff = xq_real - c;
      const double norm = diff.norm();
      if (norm == 0.0) return;
      ++e1_checked;
      Eigen::VectorXd proj = A_xq;
      for (Eigen::Index i = 0; i < c.size(); ++i) {
        if (c(i) != 0.0) proj.noalias() -= ens.A.col(i) * c(i);
      }
      if (proj.norm() < cfg.tau * norm) e1 = false;
    };
  }

  RecoveryResult res;
  try {
    res = inst.tolerant ? mcp_tolerant(ens, y, rec.epsilon, {rec.budget_bits}, solver)
                        : mcp_exact(ens, y, {rec.budget_bits}, std::nullopt, solver);
    rec.status = res.feasible ? "ok" : "infeasible";
  } catch (const ResourceError&) {
    rec.status = "resource_limit";
    e1 = false;
  }

  rec.threshold = cfg.success_threshold ? *cfg.success_threshold
                  : inst.tolerant
                      ? mismatch_chain_bound(cell.n, cell.d, rec.m, cfg.tau, cfg.t, rec.epsilon)
                      : rec.predicted_bound;
  rec.e1_pass = cfg.check_e1 && e1;
  rec.e1_checked = e1_checked;
  if (rec.status == "ok") {
    score_recovery(res, inst.x_o, rec.threshold);
    rec.success = res.within_bound;
    rec.exact = res.x_hat_q == xq;
    rec.l2_error = res.l2_error;
    rec.dl_bits = res.dl_bits;
    rec.residual = res.residual;
    rec.codec = std::string(codec_name(res.codec));
  } else {
    rec.l2_error = kNaN;
    rec.residual = kNaN;
  }
  rec.eta = rec.status == "resource_limit" ? kNaN : res.eta;
  rec.candidates = res.candidates_examined;
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<ExperimentRecord> run_cells(const ExperimentConfig& cfg, const std::vector<Cell>& cells) {
  std::vector<ExperimentRecord> records(cells.size() * cfg.trials);
  parallel_for(records.size(), cfg.workers, [&](std::size_t job) {
    const std::size_t cell = job / cfg.trials;
    const std::size_t trial = job % cfg.trials;
    records[job] = run_cell(cfg, cells[cell], cell, trial);
  });
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.cell, a.trial) < std::tie(b.cell, b.trial);
  });
  return records;
}

const char* flag(bool b) { return b ? "1" : "0"; }

std::string hex(const unsigned char* data, std::size_t len) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(digits[data[i] >> 4]);
    out.push_back(digits[data[i] & 0xF]);
  }
  return out;
}

}  // namespace

int ExperimentConfig::resolved_m(std::size_t n_value) const {
  if (m) return *m;
  const double lg = std::log2(static_cast<double>(n_value));
  const double a = alpha ? *alpha : 1.0;
  return std::max(1, static_cast<int>(std::ceil(a * lg - 1e-12)));
}

void ExperimentConfig::validate() const {
  if (n == 0) throw ConfigError("n must be at least 1");
  for (std::size_t nv : n_grid) {
    if (nv == 0) throw ConfigError("n grid entries must be at least 1");
  }
  if (alpha && !(*alpha > 0.0)) throw ConfigError("alpha must be positive");
  for (std::size_t nv : n_grid.empty() ? std::vector<std::size_t>{n} : n_grid) {
    const int mv = resolved_m(nv);
    if (mv < 1 || mv > kMaxResolutionBits) throw ConfigError("m must lie in [1, 62]");
  }
  for (std::size_t d : d_grid) {
    if (d == 0) throw ConfigError("d grid entries must be at least 1");
  }
  for (double e : epsilon_grid) {
    if (!(e >= 0.0)) throw ConfigError("epsilon grid entries must be nonnegative");
  }
  if (trials == 0) throw ConfigError("trials must be at least 1");
  if (!(tau > 0.0 && tau < 1.0)) throw ConfigError("tau must lie in (0, 1)");
  if (!(t > 0.0)) throw ConfigError("t must be positive");
  if (!(delta >= 0.0)) throw ConfigError("delta must be nonnegative");
  if (kappa && !(*kappa > 0.0)) throw ConfigError("kappa must be positive");
  if (!(smooth_r > 0.0 && smooth_r <= 1.0)) throw ConfigError("smooth_r must lie in (0, 1]");
  if (candidate_cap == 0) throw ConfigError("candidate cap must be positive");
  std::visit(overloaded{
                 [&](const SparseClass& c) {
                   if (c.k > n) throw ConfigError("sparsity k exceeds n");
                 },
                 [&](const PiecewisePolyClass& c) {
                   if (c.Q >= n) throw ConfigError("piece count Q must be below n");
                   if (c.N < 0) throw ConfigError("degree N must be nonnegative");
                 },
                 [&](const LpBallClass& c) {
                   if (!(c.p > 0.0 && c.p <= 1.0)) throw ConfigError("p must lie in (0, 1]");
                 },
                 [&](const SmoothClass& c) {
                   if (c.beta < 0) throw ConfigError("beta must be nonnegative");
                   if (!(c.gamma > 0.0)) throw ConfigError("gamma must be positive");
                 },
             },
             signal_class);
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["class"] = describe(c.signal_class);
  j["n"] = c.n;
  if (c.m) j["m"] = *c.m;
  if (c.alpha) j["alpha"] = *c.alpha;
  j["d_grid"] = c.d_grid;
  j["n_grid"] = c.n_grid;
  j["epsilon_grid"] = c.epsilon_grid;
  if (c.kappa) j["kappa"] = *c.kappa;
  j["delta"] = c.delta;
  j["tau"] = c.tau;
  j["t"] = c.t;
  j["trials"] = c.trials;
  j["master_seed"] = c.master_seed;
  if (c.success_threshold) j["success_threshold"] = *c.success_threshold;
  if (c.budget_bits) j["budget_bits"] = *c.budget_bits;
  j["smooth_r"] = c.smooth_r;
  j["check_e1"] = c.check_e1;
  j["include_literals"] = c.include_literals;
  j["candidate_cap"] = c.candidate_cap;
  j["workers"] = c.workers;
  j["wall_time_in_csv"] = c.wall_time_in_csv;
  return j;
}

double mismatch_chain_bound(std::size_t n, std::size_t d, int m, double tau, double t,
                            double epsilon) {
  const double s = sigma_ceiling(n, d, t);
  return (s / tau + 1.0) * quantization_gap_bound(n, m) + 2.0 * s * epsilon / tau + epsilon;
}

std::vector<ExperimentRecord> run_phase_scan(const ExperimentConfig& config) {
  config.validate();
  if (config.d_grid.empty()) throw ConfigError("d grid must not be empty");
  std::vector<Cell> cells;
  for (std::size_t d : config.d_grid) cells.push_back({config.n, d, std::nullopt});
  return run_cells(config, cells);
}

std::vector<ExperimentRecord> run_mismatch_scan(const ExperimentConfig& config) {
  config.validate();
  const bool approximate = std::holds_alternative<LpBallClass>(config.signal_class) ||
                           std::holds_alternative<SmoothClass>(config.signal_class);
  if (!approximate) throw ConfigError("mismatch scans need an lp-ball or smooth class");
  const auto ns = config.n_grid.empty() ? std::vector<std::size_t>{config.n} : config.n_grid;
  std::vector<std::optional<double>> eps;
  for (double e : config.epsilon_grid) eps.emplace_back(e);
  if (eps.empty()) eps.emplace_back(std::nullopt);

  std::vector<Cell> cells;
  for (std::size_t n : ns) {
    std::vector<std::size_t> ds = config.d_grid;
    if (ds.empty()) {
      const auto* lp = std::get_if<LpBallClass>(&config.signal_class);
      if (!lp) throw ConfigError("smooth mismatch scans need an explicit d grid");
      // d = ceil(k log2 n) with k = ceil(n^(p/2)).
      const double k = static_cast<double>(lp_sparsity(n, lp->p));
      ds.push_back(static_cast<std::size_t>(std::ceil(k * std::log2(static_cast<double>(n)) - 1e-9)));
    }
    for (std::size_t d : ds) {
      for (const auto& e : eps) cells.push_back({n, d, e});
    }
  }
  return run_cells(config, cells);
}

std::vector<CellSummary> summarize(std::span<const ExperimentRecord> records) {
  std::vector<CellSummary> out;
  std::vector<std::vector<double>> errors;
  for (const auto& r : records) {
    if (r.cell >= out.size()) {
      out.resize(r.cell + 1);
      errors.resize(r.cell + 1);
    }
    auto& s = out[r.cell];
    s.n = r.n;
    s.d = r.d;
    s.epsilon = r.epsilon;
    ++s.trials;
    s.successes += r.success ? 1 : 0;
    s.exact += r.exact ? 1 : 0;
    if (r.e1_pass && r.e2_pass) {
      ++s.conditioned;
      if (!r.success) ++s.violations;
    }
    // Infeasible trials count as infinite error.
    errors[r.cell].push_back(r.status == "ok" ? r.l2_error : std::numeric_limits<double>::infinity());
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    auto& s = out[c];
    if (s.trials == 0) continue;
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
    auto& e = errors[c];
    std::sort(e.begin(), e.end());
    const std::size_t h = e.size() / 2;
    s.median_error = e.size() % 2 ? e[h] : 0.5 * (e[h - 1] + e[h]);
  }
  return out;
}

CorollaryReport run_corollary_check(std::size_t n, double alpha, SparseClass kappa_class,
                                    std::size_t trials, std::uint64_t seed,
                                    const ExperimentConfig& base) {
  if (n < 2) throw ConfigError("corollary check needs n >= 2");
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  CorollaryReport rep;
  rep.n = n;
  rep.alpha = alpha;
  const double lg = std::log2(static_cast<double>(n));
  rep.m = std::max(1, static_cast<int>(std::ceil(alpha * lg - 1e-12)));
  rep.kappa = sparse_dl_bound(kappa_class.k, n, rep.m) / rep.m;
  rep.d = static_cast<std::size_t>(std::ceil(2.0 * alpha * rep.kappa * lg - 1e-9));
  const auto bound = corollary_error_bound(n, alpha, rep.kappa);
  rep.error_bound = bound.error_bound;
  rep.failure_bound = bound.failure_probability;

  ExperimentConfig cfg = base;
  cfg.signal_class = kappa_class;
  cfg.n = n;
  cfg.m = rep.m;
  cfg.alpha.reset();
  cfg.d_grid = {rep.d};
  cfg.kappa = rep.kappa;
  cfg.trials = trials;
  cfg.master_seed = seed;
  cfg.success_threshold = rep.error_bound;
  rep.records = run_phase_scan(cfg);

  rep.failures = static_cast<std::size_t>(
      std::count_if(rep.records.begin(), rep.records.end(), [](const auto& r) { return !r.success; }));
  rep.empirical = static_cast<double>(rep.failures) / static_cast<double>(trials);
  const double p0 = std::min(rep.failure_bound, 1.0);
  rep.sigma = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(trials));
  rep.pass = rep.empirical <= rep.failure_bound + 3.0 * rep.sigma;
  return rep;
}

LemmaReport run_lemma_suite(const LemmaGrid& grid, std::uint64_t seed, unsigned workers) {
  LemmaReport rep;
  std::size_t cell = 0;
  for (std::size_t d : grid.chi_d) {
    for (double tau : grid.chi_tau) {
      LemmaRow row{"chi_square", d, 4, tau, {}};
      row.check = mc_check_chi_lemma(d, tau, grid.chi_trials, derive_seed(seed, 0, cell++),
                                     std::nullopt, workers);
      rep.rows.push_back(row);
    }
  }
  for (const auto& sc : grid.sigma_cells) {
    LemmaRow row{"sigma_max", sc.d, sc.n, sc.t, {}};
    row.check = sigma_max_tail_check(sc.d, sc.n, sc.t, grid.sigma_trials,
                                     derive_seed(seed, 0, cell++), workers);
    rep.rows.push_back(row);
  }
  rep.all_pass = std::all_of(rep.rows.begin(), rep.rows.end(),
                             [](const LemmaRow& r) { return r.check.pass; });
  return rep;
}

// --- output -------------------------------------------------------------------

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_records_csv(std::ostream& out, std::span<const ExperimentRecord> records,
                       bool include_wall_time) {
  out << "signal_class,n,m,d,cell,trial,seed,kappa,delta,tau,t,budget_bits,epsilon,"
         "approx_error,approx_epsilon,approx_within,epsilon_covers,status,success,exact,"
         "l2_error,threshold,predicted_bound,dl_bits,residual,eta,sigma_max,e1_pass,"
         "e1_checked,e2_pass,candidates,codec";
  if (include_wall_time) out << ",wall_ms";
  out << '\n';
  for (const auto& r : records) {
    out << csv_quote(r.signal_class) << ',' << r.n << ',' << r.m << ',' << r.d << ',' << r.cell
        << ',' << r.trial << ',' << r.seed << ',' << format_double(r.kappa) << ','
        << format_double(r.delta) << ',' << format_double(r.tau) << ',' << format_double(r.t)
        << ',' << r.budget_bits << ',' << format_double(r.epsilon) << ','
        << format_double(r.approx_error) << ',' << format_double(r.approx_epsilon) << ','
        << flag(r.approx_within) << ',' << flag(r.epsilon_covers) << ',' << csv_quote(r.status)
        << ',' << flag(r.success) << ',' << flag(r.exact) << ',' << format_double(r.l2_error)
        << ',' << format_double(r.threshold) << ',' << format_double(r.predicted_bound) << ','
        << r.dl_bits << ',' << format_double(r.residual) << ',' << format_double(r.eta) << ','
        << format_double(r.sigma_max) << ',' << flag(r.e1_pass) << ',' << r.e1_checked << ','
        << flag(r.e2_pass) << ',' << r.candidates << ',' << csv_quote(r.codec);
    if (include_wall_time) out << ',' << format_double(r.wall_ms);
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const CellSummary> cells) {
  out << "cell,n,d,epsilon,trials,successes,success_rate,exact,conditioned,violations,"
         "median_error\n";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& s = cells[c];
    out << c << ',' << s.n << ',' << s.d << ',' << format_double(s.epsilon) << ',' << s.trials
        << ',' << s.successes << ',' << format_double(s.success_rate) << ',' << s.exact << ','
        << s.conditioned << ',' << s.violations << ',' << format_double(s.median_error) << '\n';
  }
}

void write_lemma_csv(std::ostream& out, const LemmaReport& report) {
  out << "kind,d,n,parameter,trials,events,empirical,bound,sigma,pass\n";
  for (const auto& r : report.rows) {
    out << r.kind << ',' << r.d << ',' << r.n << ',' << format_double(r.parameter) << ','
        << r.check.trials << ',' << r.check.events << ',' << format_double(r.check.empirical)
        << ',' << format_double(r.check.bound) << ',' << format_double(r.check.sigma) << ','
        << flag(r.check.pass) << '\n';
  }
}

void write_corollary_csv(std::ostream& out, const CorollaryReport& r) {
  out << "n,m,d,alpha,kappa,error_bound,failure_bound,trials,failures,empirical,sigma,pass\n";
  out << r.n << ',' << r.m << ',' << r.d << ',' << format_double(r.alpha) << ','
      << format_double(r.kappa) << ',' << format_double(r.error_bound) << ','
      << format_double(r.failure_bound) << ',' << r.records.size() << ',' << r.failures << ','
      << format_double(r.empirical) << ',' << format_double(r.sigma) << ',' << flag(r.pass)
      << '\n';
}

std::string git_blob_sha1(std::span<const std::uint8_t> content) {
  const std::string header = "blob " + std::to_string(content.size()) + std::string(1, '\0');
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw std::runtime_error("EVP_MD_CTX_new failed");
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
                  EVP_DigestUpdate(ctx, content.data(), content.size()) == 1 &&
                  EVP_DigestFinal_ex(ctx, digest, &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw std::runtime_error("SHA-1 digest failed");
  return hex(digest, len);
}

std::string git_blob_sha1(const std::string& content) {
  return git_blob_sha1(std::span(reinterpret_cast<const std::uint8_t*>(content.data()), content.size()));
}

nlohmann::json make_manifest(const std::string& command, const nlohmann::json& config,
                             const std::vector<std::string>& output_paths, double wall_seconds) {
  nlohmann::json j;
  j["command"] = command;
  j["config"] = config;
  j["outputs"] = nlohmann::json::array();
  for (const auto& path : output_paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read output file " + path);
    const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    j["outputs"].push_back({{"path", path}, {"bytes", content.size()}, {"git_blob_sha1", git_blob_sha1(content)}});
  }
  j["wall_seconds"] = wall_seconds;
  return j;
}

}  // namespace mcp
