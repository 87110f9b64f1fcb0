#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "mcp/codecs.hpp"
#include "mcp/measure.hpp"
#include "mcp/quantize.hpp"
#include "mcp/signals.hpp"

namespace mcp {

inline constexpr std::uint64_t kDefaultCandidateCap = std::uint64_t{1} << 24;

// Enumeration or search would exceed the configured candidate cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Which codecs make up the searched codebook.
struct CodebookSpec {
  bool sparse = false;
  bool piecewise_poly = false;
  int pp_max_degree = 0;
  bool literal = false;
};

// Sparse and l_p-ball classes map to the sparse codec; piecewise-polynomial
// and smooth classes to the piecewise-polynomial codec with their degree.
CodebookSpec codebook_for(const std::vector<SignalClassSpec>& classes, bool include_literals = false);

struct CodebookEntry {
  QuantizedVector x;
  std::size_t dl_bits = 0;
  CodecId codec = CodecId::sparse;
  Bits stream;
};

// Lazy (dl, bitstream)-ordered stream over every codebook member with
// dl <= budget, one entry per distinct vector per codec. Pulling more than
// `cap` entries throws ResourceError; so does building a
// piecewise-polynomial list larger than the cap.
class CodebookStream {
 public:
  CodebookStream(const CodebookSpec& spec, std::size_t n, int m, DlBudget budget,
                 std::uint64_t cap = kDefaultCandidateCap);
  ~CodebookStream();
  CodebookStream(CodebookStream&&) noexcept;
  CodebookStream& operator=(CodebookStream&&) noexcept;

  std::optional<CodebookEntry> next();
  std::uint64_t yielded() const noexcept { return yielded_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::uint64_t cap_;
  std::uint64_t yielded_ = 0;
};

CodebookStream enumerate_codebook(const std::vector<SignalClassSpec>& classes, std::size_t n, int m,
                                  DlBudget budget, bool include_literals = false,
                                  std::uint64_t cap = kDefaultCandidateCap);

// Number of distinct piecewise-polynomial codes with dl <= budget, before
// deduplication by decoded vector. Saturates at +infinity.
double count_pp_codes(std::size_t n, int m, int max_degree, DlBudget budget);

// Called for every candidate whose residual the solver evaluates.
using CandidateObserver = std::function<void(const Eigen::VectorXd& x, bool feasible)>;

struct SolverConfig {
  CodebookSpec codebook{.sparse = true};
  int m = 8;
  std::uint64_t candidate_cap = kDefaultCandidateCap;
  // Only used to fill RecoveryResult::predicted_bound.
  double tau = kDefaultTau;
  double t = 1.0;
  CandidateObserver observer;
};

struct RecoveryResult {
  bool feasible = false;
  Eigen::VectorXd x_hat;
  QuantizedVector x_hat_q;
  CodecId codec = CodecId::sparse;
  Bits stream;
  std::size_t dl_bits = 0;
  double residual = 0.0;
  double eta = 0.0;
  double l2_error = 0.0;  // set by score_recovery
  double predicted_bound = 0.0;
  bool within_bound = false;  // set by score_recovery
  std::uint64_t candidates_examined = 0;
};

// Minimal-dl codebook member with dl <= budget and ||A x - y||_2 <= eta,
// ties resolved by bitstream order. eta defaults to
// sigma_max * quantization_gap_bound(n, m). Throws std::domain_error on a
// length mismatch or a budget below the codec header.
RecoveryResult mcp_exact(const MeasurementEnsemble& ensemble, const Eigen::VectorXd& y,
                         DlBudget budget, std::optional<double> eta, const SolverConfig& config);

// mcp_exact with eta = sigma_max * (epsilon_n + quantization_gap_bound(n, m)).
RecoveryResult mcp_tolerant(const MeasurementEnsemble& ensemble, const Eigen::VectorXd& y,
                            double epsilon_n, DlBudget budget, const SolverConfig& config);

// Fills l2_error and within_bound (l2_error <= threshold).
void score_recovery(RecoveryResult& result, const Eigen::VectorXd& x_o, double threshold);

// ceil(2 (kappa + delta) m) + c_pair.
DlBudget difference_budget(double kappa, double delta, int m, int c_pair = kPairOverheadBits);

// (tau^-1 (sqrt(n/d) + 1 + t) + 1) * sqrt(n 2^(-2m+1)).
double predicted_error_bound(std::size_t n, std::size_t d, int m, double tau, double t);

struct CorollaryBound {
  double error_bound = 0.0;
  double failure_probability = 0.0;
};

// 10 n^(1/2 - alpha) / (sqrt(kappa) log2 n), failing with probability at
// most n^(-alpha kappa).
CorollaryBound corollary_error_bound(std::size_t n, double alpha, double kappa);

}  // namespace mcp
