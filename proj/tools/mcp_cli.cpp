#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mcp/codecs.hpp"
#include "mcp/harness.hpp"
#include "mcp/signals.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCriterion = 1;
constexpr int kExitUsage = 2;

struct ClassArgs {
  std::string name = "sparse";
  std::size_t k = 2;
  std::size_t Q = 1;
  int N = 1;
  double p = 0.5;
  int beta = 1;
  double gamma = 1.0;

  mcp::SignalClassSpec spec() const {
    if (name == "sparse") return mcp::SparseClass{k};
    if (name == "piecewise_poly") return mcp::PiecewisePolyClass{Q, N};
    if (name == "lp_ball") return mcp::LpBallClass{p};
    if (name == "smooth") return mcp::SmoothClass{beta, gamma};
    throw mcp::ConfigError("unknown signal class '" + name + "'");
  }
};

struct OutputArgs {
  std::string csv;
  std::string summary;
  std::string manifest;
};

struct ExperimentArgs {
  ClassArgs cls;
  mcp::ExperimentConfig cfg;
  int m = 0;
  double alpha = 0.0;
  double kappa = 0.0;
  double threshold = -1.0;
  std::size_t budget = 0;
  bool no_e1 = false;
  double expect_success = -1.0;
  OutputArgs out;

  mcp::ExperimentConfig resolve() {
    mcp::ExperimentConfig c = cfg;
    c.signal_class = cls.spec();
    if (m > 0) c.m = m;
    if (alpha > 0.0) c.alpha = alpha;
    if (kappa > 0.0) c.kappa = kappa;
    if (threshold >= 0.0) c.success_threshold = threshold;
    if (budget > 0) c.budget_bits = budget;
    c.check_e1 = !no_e1;
    return c;
  }
};

void add_class_options(CLI::App* sub, ClassArgs& a) {
  sub->add_option("--class", a.name, "sparse | piecewise_poly | lp_ball | smooth")
      ->check(CLI::IsMember({"sparse", "piecewise_poly", "lp_ball", "smooth"}));
  sub->add_option("--k", a.k, "sparsity");
  sub->add_option("--Q", a.Q, "number of breakpoints");
  sub->add_option("--N", a.N, "polynomial degree");
  sub->add_option("--p", a.p, "lp-ball exponent in (0, 1]");
  sub->add_option("--beta", a.beta, "smoothness order");
  sub->add_option("--gamma", a.gamma, "derivative bound");
}

void add_output_options(CLI::App* sub, OutputArgs& o, bool with_summary) {
  sub->add_option("--out", o.csv, "record CSV path (stdout if omitted)");
  if (with_summary) sub->add_option("--summary", o.summary, "per-cell summary CSV path");
  sub->add_option("--manifest", o.manifest, "JSON run manifest path");
}

void add_experiment_options(CLI::App* sub, ExperimentArgs& a) {
  add_class_options(sub, a.cls);
  auto& c = a.cfg;
  sub->add_option("--n", c.n, "signal length");
  sub->add_option("--m", a.m, "resolution bits (default ceil(alpha log2 n))");
  sub->add_option("--alpha", a.alpha, "resolution exponent");
  sub->add_option("--d", c.d_grid, "measurement counts")->delimiter(',');
  sub->add_option("--kappa", a.kappa, "complexity per resolution bit (default from class)");
  sub->add_option("--delta", c.delta, "budget slack");
  sub->add_option("--tau", c.tau, "null-space separation constant");
  sub->add_option("--t", c.t, "singular-value slack");
  sub->add_option("--trials", c.trials, "trials per cell");
  sub->add_option("--seed", c.master_seed, "master seed");
  sub->add_option("--threshold", a.threshold, "success threshold (default: predicted_error_bound)");
  sub->add_option("--budget", a.budget, "solver budget in bits (default 2(kappa+delta)m + C_pair)");
  sub->add_option("--cap", c.candidate_cap, "candidate cap");
  sub->add_option("--workers", c.workers, "worker threads (0 = hardware)");
  sub->add_flag("--no-e1", a.no_e1, "skip the null-space event check");
  sub->add_flag("--literals", c.include_literals, "include literal codewords");
  sub->add_flag("--wall-time", c.wall_time_in_csv, "add wall_ms column");
  sub->add_option("--expect-success", a.expect_success, "minimum per-cell success rate");
  add_output_options(sub, a.out, true);
}

// Writes via `emit` to the path, or to stdout when the path is empty. Files
// written are appended to `written` for the manifest.
template <class Emit>
void write_output(const std::string& path, std::vector<std::string>& written, Emit emit) {
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw mcp::ConfigError("cannot open output file " + path);
  emit(f);
  written.push_back(path);
}

void write_manifest(const OutputArgs& o, const std::string& command, const nlohmann::json& config,
                    const std::vector<std::string>& written, double seconds) {
  if (o.manifest.empty()) return;
  std::ofstream f(o.manifest, std::ios::binary);
  if (!f) throw mcp::ConfigError("cannot open manifest file " + o.manifest);
  f << mcp::make_manifest(command, config, written, seconds).dump(2) << '\n';
}

int report_records(const std::string& command, ExperimentArgs& a,
                   const std::vector<mcp::ExperimentRecord>& records,
                   const mcp::ExperimentConfig& cfg, double seconds) {
  std::vector<std::string> written;
  write_output(a.out.csv, written,
               [&](std::ostream& s) { mcp::write_records_csv(s, records, cfg.wall_time_in_csv); });
  const auto cells = mcp::summarize(records);
  if (!a.out.summary.empty()) {
    write_output(a.out.summary, written, [&](std::ostream& s) { mcp::write_summary_csv(s, cells); });
  }
  write_manifest(a.out, command, mcp::to_json(cfg), written, seconds);

  bool ok = true;
  for (const auto& c : cells) {
    if (c.violations > 0) {
      std::cerr << "cell d=" << c.d << " n=" << c.n << ": " << c.violations
                << " conditional-bound violations\n";
      ok = false;
    }
    if (a.expect_success >= 0.0 && c.success_rate < a.expect_success) {
      std::cerr << "cell d=" << c.d << " n=" << c.n << ": success rate " << c.success_rate
                << " below " << a.expect_success << '\n';
      ok = false;
    }
  }
  for (const auto& r : records) {
    if (!r.approx_within) {
      std::cerr << "trial " << r.trial << " cell " << r.cell << ": approximation error above its bound\n";
      ok = false;
    }
  }
  return ok ? kExitPass : kExitCriterion;
}

std::vector<char> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw mcp::ConfigError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Expands "--config FILE" into "--key value" tokens placed ahead of the
// remaining flags, so flags on the command line take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> rest, injected;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] != "--config") {
      rest.push_back(args[i]);
      continue;
    }
    if (i + 1 >= args.size()) throw mcp::ConfigError("--config needs a file");
    std::ifstream f(args[++i]);
    if (!f) throw mcp::ConfigError("cannot open config file " + args[i]);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw mcp::ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (value == "true") {
        injected.push_back("--" + key);
      } else if (value != "false") {
        injected.push_back("--" + key);
        injected.push_back(value);
      }
    }
  }
  if (injected.empty()) return rest;
  // Config keys belong to the subcommand: insert them right after it.
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < rest.size() && rest[i].rfind("-", 0) == 0) out.push_back(rest[i++]);
  if (i < rest.size()) out.push_back(rest[i++]);
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(i), rest.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum complexity pursuit experiments"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_help_all_flag("--help-all", "show help for every subcommand");
  int status = kExitPass;
  const auto start = std::chrono::steady_clock::now();
  auto seconds = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  ExperimentArgs scan_args;
  auto* scan = app.add_subcommand("scan", "phase-transition scan over the d grid");
  add_experiment_options(scan, scan_args);
  scan->callback([&] {
    const auto cfg = scan_args.resolve();
    const auto records = mcp::run_phase_scan(cfg);
    status = report_records("scan", scan_args, records, cfg, seconds());
  });

  ExperimentArgs mm_args;
  mm_args.cls.name = "lp_ball";
  mm_args.cfg.d_grid.clear();
  auto* mismatch = app.add_subcommand("mismatch", "tolerance-constrained recovery of approximate classes");
  add_experiment_options(mismatch, mm_args);
  mismatch->add_option("--n-grid", mm_args.cfg.n_grid, "signal lengths")->delimiter(',');
  mismatch->add_option("--epsilon", mm_args.cfg.epsilon_grid, "requested epsilon_n values")->delimiter(',');
  mismatch->add_option("--r", mm_args.cfg.smooth_r, "subinterval width for the smooth class");
  mismatch->callback([&] {
    const auto cfg = mm_args.resolve();
    const auto records = mcp::run_mismatch_scan(cfg);
    status = report_records("mismatch", mm_args, records, cfg, seconds());
  });

  std::size_t cor_n = 1024, cor_k = 2, cor_trials = 500;
  double cor_alpha = 1.0;
  std::uint64_t cor_seed = 1;
  unsigned cor_workers = 0;
  OutputArgs cor_out;
  std::string cor_records;
  auto* corollary = app.add_subcommand("corollary", "finite-n check of the corollary bound");
  corollary->add_option("--n", cor_n, "signal length");
  corollary->add_option("--alpha", cor_alpha, "resolution exponent");
  corollary->add_option("--k", cor_k, "sparsity of the class fixing kappa");
  corollary->add_option("--trials", cor_trials, "trials");
  corollary->add_option("--seed", cor_seed, "master seed");
  corollary->add_option("--workers", cor_workers, "worker threads (0 = hardware)");
  corollary->add_option("--records", cor_records, "per-trial record CSV path");
  add_output_options(corollary, cor_out, false);
  corollary->callback([&] {
    mcp::ExperimentConfig base;
    base.workers = cor_workers;
    const auto rep = mcp::run_corollary_check(cor_n, cor_alpha, mcp::SparseClass{cor_k}, cor_trials,
                                              cor_seed, base);
    std::vector<std::string> written;
    write_output(cor_out.csv, written, [&](std::ostream& s) { mcp::write_corollary_csv(s, rep); });
    if (!cor_records.empty()) {
      write_output(cor_records, written,
                   [&](std::ostream& s) { mcp::write_records_csv(s, rep.records); });
    }
    nlohmann::json cfg = {{"n", cor_n}, {"alpha", cor_alpha}, {"k", cor_k},
                          {"trials", cor_trials}, {"seed", cor_seed}};
    write_manifest(cor_out, "corollary", cfg, written, seconds());
    status = rep.pass ? kExitPass : kExitCriterion;
  });

  mcp::LemmaGrid grid;
  std::uint64_t lemma_seed = 1;
  unsigned lemma_workers = 0;
  OutputArgs lemma_out;
  auto* lemmas = app.add_subcommand("lemmas", "Monte-Carlo checks of the concentration bounds");
  lemmas->add_option("--chi-d", grid.chi_d, "chi-square d grid")->delimiter(',');
  lemmas->add_option("--chi-tau", grid.chi_tau, "chi-square tau grid")->delimiter(',');
  lemmas->add_option("--chi-trials", grid.chi_trials, "chi-square trials per cell");
  lemmas->add_option("--sigma-trials", grid.sigma_trials, "sigma_max trials per cell");
  lemmas->add_option("--seed", lemma_seed, "master seed");
  lemmas->add_option("--workers", lemma_workers, "worker threads (0 = hardware)");
  add_output_options(lemmas, lemma_out, false);
  lemmas->callback([&] {
    const auto rep = mcp::run_lemma_suite(grid, lemma_seed, lemma_workers);
    std::vector<std::string> written;
    write_output(lemma_out.csv, written, [&](std::ostream& s) { mcp::write_lemma_csv(s, rep); });
    nlohmann::json cfg = {{"chi_d", grid.chi_d}, {"chi_tau", grid.chi_tau},
                          {"chi_trials", grid.chi_trials}, {"sigma_trials", grid.sigma_trials},
                          {"seed", lemma_seed}};
    write_manifest(lemma_out, "lemmas", cfg, written, seconds());
    status = rep.all_pass ? kExitPass : kExitCriterion;
  });

  std::string enc_in, enc_out, enc_codec = "auto";
  int enc_m = 8;
  auto* encode = app.add_subcommand("encode", "encode a signal CSV (values in [0, 1])");
  encode->add_option("--in", enc_in, "signal CSV, one value per line")->required();
  encode->add_option("--m", enc_m, "resolution bits");
  encode->add_option("--codec", enc_codec, "auto | sparse | piecewise_poly | literal | compressor");
  encode->add_option("--out", enc_out, "output stream file")->required();
  encode->callback([&] {
    std::ifstream in(enc_in);
    if (!in) throw mcp::ConfigError("cannot open " + enc_in);
    const auto x = mcp::quantize_vector(mcp::read_signal_csv(in), enc_m);
    mcp::CodedSignal coded;
    if (enc_codec == "auto") {
      coded = mcp::best_encoding(x);
    } else {
      const auto id = mcp::codec_from_name(enc_codec);
      if (!id) throw mcp::ConfigError("unknown codec '" + enc_codec + "'");
      switch (*id) {
        case mcp::CodecId::sparse: coded = mcp::encode_sparse(x); break;
        case mcp::CodecId::piecewise_poly: {
          const auto fit = mcp::fit_piecewise_poly_code(x, 3);
          if (!fit) throw mcp::ConfigError("no piecewise-polynomial code found for this signal");
          coded = mcp::encode_piecewise_poly(*fit, x.size(), x.bits());
          break;
        }
        case mcp::CodecId::literal: coded = mcp::encode_literal(x); break;
        case mcp::CodecId::compressor: coded = mcp::encode_compressor(x); break;
      }
    }
    const auto bytes = mcp::pack_bits(coded.payload);
    std::ofstream out(enc_out, std::ios::binary);
    if (!out) throw mcp::ConfigError("cannot open " + enc_out);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    std::cout << "codec=" << mcp::codec_name(coded.codec) << " n=" << x.size() << " m=" << enc_m
              << " dl_bits=" << coded.dl_bits() << '\n';
  });

  std::string dec_in, dec_out;
  int dec_m = 8;
  auto* decode = app.add_subcommand("decode", "decode a stream file to a signal CSV");
  decode->add_option("--in", dec_in, "stream file")->required();
  decode->add_option("--m", dec_m, "resolution bits");
  decode->add_option("--out", dec_out, "signal CSV path (stdout if omitted)");
  decode->callback([&] {
    const auto raw = read_file(dec_in);
    const std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
    const auto bits = mcp::unpack_bits(bytes);
    const auto x = mcp::decode(bits, mcp::peek_length(bits), dec_m);
    std::vector<std::string> unused;
    write_output(dec_out, unused, [&](std::ostream& s) { mcp::write_signal_csv(s, x.to_real()); });
  });

  try {
    const auto args = expand_config(argc, argv);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  } catch (const mcp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mcp::DecodeError& e) {
    std::cerr << "decode error: " << e.what() << '\n';
    return kExitUsage;
  }
  return status;
}
