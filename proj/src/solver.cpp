#include "mcp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace mcp {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double v = 1.0;
  for (std::size_t i = 1; i <= k; ++i) v = v * static_cast<double>(n - k + i) / static_cast<double>(i);
  return v;
}

// Lexicographic successor of an increasing combination with entries below hi.
bool next_combination(std::vector<std::size_t>& c, std::size_t hi) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < hi - (k - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k, std::size_t lo) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), lo);
  return c;
}

// Lexicographic successor of a tuple with entries in [lo, hi].
bool next_tuple(std::vector<std::uint64_t>& v, std::uint64_t lo, std::uint64_t hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi) {
      ++v[i];
      return true;
    }
    v[i] = lo;
  }
  return false;
}

bool pp_degree_supported(std::size_t n, int m, int degree) {
  const int mp = pp_coefficient_bits(m, degree);
  return mp <= kMaxResolutionBits && mp + degree * ceil_log2(n) <= 120;
}

// All (degree + 1)-tuples of numerators at mp bits whose sum is below 2^mp.
std::vector<std::vector<std::uint64_t>> coefficient_tuples(int degree, int mp) {
  const std::uint64_t limit = std::uint64_t{1} << mp;
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> t(degree + 1, 0);
  do {
    const std::uint64_t sum = std::accumulate(t.begin(), t.end(), std::uint64_t{0});
    if (sum < limit) out.push_back(t);
  } while (next_tuple(t, 0, limit - 1));
  return out;
}

bool entry_less(const CodebookEntry& a, const CodebookEntry& b) {
  if (a.dl_bits != b.dl_bits) return a.dl_bits < b.dl_bits;
  return a.stream < b.stream;
}

// Every piecewise-polynomial codebook member, deduplicated by vector and
// sorted by (dl, stream).
std::vector<CodebookEntry> build_pp_list(std::size_t n, int m, int max_degree, DlBudget budget,
                                         std::uint64_t cap) {
  if (count_pp_codes(n, m, max_degree, budget) > static_cast<double>(cap)) {
    throw ResourceError("piecewise-polynomial codebook exceeds the candidate cap");
  }
  std::map<QuantizedVector, CodebookEntry> best;
  for (int degree = 0; degree <= max_degree; ++degree) {
    if (!pp_degree_supported(n, m, degree)) continue;
    if (pp_code_length(1, degree, n, m) > budget.bits) continue;
    const auto tuples = coefficient_tuples(degree, pp_coefficient_bits(m, degree));
    for (std::size_t pieces = 1; pieces <= n; ++pieces) {
      const std::size_t len = pp_code_length(pieces, degree, n, m);
      if (len > budget.bits) break;
      auto cuts = first_combination(pieces - 1, 1);
      do {
        std::vector<std::uint64_t> pick(pieces, 0);
        do {
          PiecewisePolyCode code;
          code.degree = degree;
          code.breakpoints.assign(cuts.begin(), cuts.end());
          for (auto p : pick) code.coefficients.push_back(tuples[p]);
          CodebookEntry e;
          e.x = render_piecewise_poly(code, n, m);
          e.codec = CodecId::piecewise_poly;
          e.stream = encode_piecewise_poly(code, n, m).payload;
          e.dl_bits = e.stream.size();
          auto it = best.find(e.x);
          if (it == best.end()) {
            best.emplace(e.x, std::move(e));
          } else if (entry_less(e, it->second)) {
            it->second = std::move(e);
          }
        } while (next_tuple(pick, 0, tuples.size() - 1));
      } while (pieces > 1 && next_combination(cuts, n));
    }
  }
  std::vector<CodebookEntry> out;
  out.reserve(best.size());
  for (auto& [x, e] : best) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), entry_less);
  return out;
}

// ||A x - y||_2 with columns accumulated in ascending index order. Every
// feasibility decision goes through this one routine.
double canonical_residual(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                          const std::vector<std::size_t>& support,
                          const std::vector<std::uint64_t>& nums, int m) {
  Eigen::VectorXd r = -y;
  for (std::size_t j = 0; j < support.size(); ++j) {
    r += A.col(static_cast<Eigen::Index>(support[j])) * std::ldexp(static_cast<double>(nums[j]), -m);
  }
  return r.norm();
}

double canonical_residual(const Eigen::MatrixXd& A, const Eigen::VectorXd& y,
                          const QuantizedVector& x) {
  std::vector<std::size_t> support;
  std::vector<std::uint64_t> nums;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) {
      support.push_back(i);
      nums.push_back(x[i]);
    }
  }
  return canonical_residual(A, y, support, nums, x.bits());
}

struct SparseHit {
  std::vector<std::size_t> support;
  std::vector<std::uint64_t> nums;
  double residual = 0.0;
};

// Exact search over k-sparse codebook members for the lexicographically
// first feasible one. Supports whose real least-squares residual exceeds
// eta are skipped; the rest are searched by enumerating lattice points of
// the feasibility ellipsoid, first coordinate outermost.
class SparseSearch {
 public:
  SparseSearch(const Eigen::MatrixXd& A, const Eigen::VectorXd& y, int m, double eta,
               std::uint64_t cap, const CandidateObserver& observer, std::uint64_t& examined)
      : A_(A), y_(y), m_(m), eta_(eta), cap_(cap), observer_(observer), examined_(examined),
        top_((std::uint64_t{1} << m) - 1), yy_(y.squaredNorm()), b_(A.transpose() * y),
        buffer_(Eigen::VectorXd::Zero(A.cols())) {
    // Widened so rounding never prunes a feasible point; the canonical
    // residual makes the final decision.
    eta2_ = eta * eta * (1.0 + 1e-9) + 1e-14 * (yy_ + 1.0);
  }

  std::optional<SparseHit> level(std::size_t k) {
    const auto n = static_cast<std::size_t>(A_.cols());
    if (k == 0) {
      std::vector<std::size_t> none;
      std::vector<std::uint64_t> no_vals;
      if (visit(none, no_vals)) return hit_;
      return std::nullopt;
    }
    if (binomial(n, k) > static_cast<double>(cap_)) {
      throw ResourceError("sparse search over " + std::to_string(k) + "-subsets exceeds the candidate cap");
    }
    if (k >= 2 && gram_.size() == 0) gram_ = A_.transpose() * A_;
    auto support = first_combination(k, 0);
    do {
      if (search_support(support)) return hit_;
    } while (next_combination(support, n));
    return std::nullopt;
  }

 private:
  double gram(std::size_t i, std::size_t j) const {
    if (gram_.size() == 0) return A_.col(static_cast<Eigen::Index>(i)).squaredNorm();
    return gram_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  // Returns true when a feasible point was found (stored in hit_).
  bool visit(const std::vector<std::size_t>& support, const std::vector<std::uint64_t>& nums) {
    if (++examined_ > cap_) throw ResourceError("solver examined more candidates than the cap");
    const double r = canonical_residual(A_, y_, support, nums, m_);
    const bool feasible = r <= eta_;
    if (observer_) {
      for (std::size_t j = 0; j < support.size(); ++j) {
        buffer_(static_cast<Eigen::Index>(support[j])) = std::ldexp(static_cast<double>(nums[j]), -m_);
      }
      observer_(buffer_, feasible);
      for (std::size_t s : support) buffer_(static_cast<Eigen::Index>(s)) = 0.0;
    }
    if (feasible) hit_ = SparseHit{support, nums, r};
    return feasible;
  }

  bool search_support(const std::vector<std::size_t>& support) {
    const auto k = static_cast<Eigen::Index>(support.size());
    // Reversed Gram matrix, so its Cholesky factor yields a triangular
    // form whose first row involves only the first coordinate.
    Eigen::MatrixXd H(k, k);
    Eigen::VectorXd bs(k);
    for (Eigen::Index a = 0; a < k; ++a) {
      bs(a) = b_(static_cast<Eigen::Index>(support[a]));
      for (Eigen::Index c = 0; c < k; ++c) {
        H(k - 1 - a, k - 1 - c) = gram(support[a], support[c]);
      }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(H);
    const Eigen::MatrixXd LH = llt.matrixL();
    bool definite = llt.info() == Eigen::Success;
    for (Eigen::Index a = 0; definite && a < k; ++a) {
      definite = LH(a, a) > 1e-10 * std::sqrt(H(a, a));
    }
    if (!definite) return search_box(support);

    // Least-squares centre in the original coordinate order.
    Eigen::VectorXd bs_rev = bs.reverse();
    const Eigen::VectorXd center = llt.solve(bs_rev).reverse();
    const double ls2 = std::max(0.0, yy_ - bs.dot(center));
    if (ls2 > eta2_) return false;
    const double rho2 = eta2_ - ls2;

    // M(j, l) = LH(k-1-l, k-1-j): lower-triangular with
    // (v - center)' G (v - center) = ||M (v - center)||^2.
    M_.resize(k, k);
    M_.setZero();
    for (Eigen::Index j = 0; j < k; ++j) {
      for (Eigen::Index l = 0; l <= j; ++l) M_(j, l) = LH(k - 1 - l, k - 1 - j);
    }
    center_ = center;
    w_.assign(static_cast<std::size_t>(k), 0.0);
    nums_.assign(static_cast<std::size_t>(k), 0);
    return descend(support, 0, rho2);
  }

  bool descend(const std::vector<std::size_t>& support, Eigen::Index j, double budget) {
    const auto k = static_cast<Eigen::Index>(support.size());
    if (j == k) return visit(support, nums_);
    double s = 0.0;
    for (Eigen::Index l = 0; l < j; ++l) s += M_(j, l) * w_[l];
    const double h = std::sqrt(std::max(budget, 0.0));
    const double diag = M_(j, j);
    const double scale = std::ldexp(1.0, m_);
    const double lo_v = center_(j) + (-s - h) / diag;
    const double hi_v = center_(j) + (-s + h) / diag;
    const double lo_c = std::max(1.0, std::ceil(lo_v * scale - 1e-6));
    const double hi_c = std::min(static_cast<double>(top_), std::floor(hi_v * scale + 1e-6));
    for (double c = lo_c; c <= hi_c; c += 1.0) {
      const double w = std::ldexp(c, -m_) - center_(j);
      const double z = s + diag * w;
      w_[j] = w;
      nums_[j] = static_cast<std::uint64_t>(c);
      if (descend(support, j + 1, budget - z * z)) return true;
    }
    return false;
  }

  // Rank-deficient support: plain lexicographic scan of all value tuples.
  bool search_box(const std::vector<std::size_t>& support) {
    Eigen::MatrixXd As(A_.rows(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j) {
      As.col(static_cast<Eigen::Index>(j)) = A_.col(static_cast<Eigen::Index>(support[j]));
    }
    const Eigen::VectorXd v = As.colPivHouseholderQr().solve(y_);
    if ((As * v - y_).squaredNorm() > eta2_) return false;
    std::vector<std::uint64_t> nums(support.size(), 1);
    do {
      if (visit(support, nums)) return true;
    } while (next_tuple(nums, 1, top_));
    return false;
  }

  const Eigen::MatrixXd& A_;
  const Eigen::VectorXd& y_;
  int m_;
  double eta_;
  std::uint64_t cap_;
  const CandidateObserver& observer_;
  std::uint64_t& examined_;
  std::uint64_t top_;
  double yy_;
  double eta2_ = 0.0;
  Eigen::VectorXd b_;
  Eigen::MatrixXd gram_;
  Eigen::VectorXd buffer_;
  Eigen::MatrixXd M_;
  Eigen::VectorXd center_;
  std::vector<double> w_;
  std::vector<std::uint64_t> nums_;
  SparseHit hit_;
};

QuantizedVector sparse_vector(std::size_t n, int m, const SparseHit& hit) {
  std::vector<std::uint64_t> nums(n, 0);
  for (std::size_t j = 0; j < hit.support.size(); ++j) nums[hit.support[j]] = hit.nums[j];
  return QuantizedVector(std::move(nums), m);
}

void check_solver_inputs(const MeasurementEnsemble& e, const Eigen::VectorXd& y, DlBudget budget,
                         int m) {
  if (static_cast<std::size_t>(y.size()) != e.d || static_cast<std::size_t>(e.A.rows()) != e.d ||
      static_cast<std::size_t>(e.A.cols()) != e.n) {
    throw std::domain_error("measurement vector length differs from d");
  }
  if (budget.bits < static_cast<std::size_t>(kCodecHeaderBits)) {
    throw std::domain_error("budget is below the codec header length");
  }
  if (m < 1 || m > kMaxResolutionBits) throw std::domain_error("resolution out of range");
}

}  // namespace

CodebookSpec codebook_for(const std::vector<SignalClassSpec>& classes, bool include_literals) {
  CodebookSpec spec;
  spec.literal = include_literals;
  for (const auto& c : classes) {
    std::visit(overloaded{
                   [&](const SparseClass&) { spec.sparse = true; },
                   [&](const LpBallClass&) { spec.sparse = true; },
                   [&](const PiecewisePolyClass& p) {
                     spec.piecewise_poly = true;
                     spec.pp_max_degree = std::max(spec.pp_max_degree, p.N);
                   },
                   [&](const SmoothClass& s) {
                     spec.piecewise_poly = true;
                     spec.pp_max_degree = std::max(spec.pp_max_degree, s.beta);
                   },
               },
               c);
  }
  return spec;
}

double count_pp_codes(std::size_t n, int m, int max_degree, DlBudget budget) {
  double total = 0.0;
  for (int degree = 0; degree <= max_degree; ++degree) {
    if (!pp_degree_supported(n, m, degree)) continue;
    const double limit = std::ldexp(1.0, pp_coefficient_bits(m, degree));
    // Nonnegative (degree+1)-tuples with sum <= limit - 1.
    const double tuples = binomial(static_cast<std::size_t>(limit) + degree, degree + 1);
    for (std::size_t pieces = 1; pieces <= n; ++pieces) {
      if (pp_code_length(pieces, degree, n, m) > budget.bits) break;
      total += binomial(n - 1, pieces - 1) * std::pow(tuples, static_cast<double>(pieces));
      if (!std::isfinite(total)) return std::numeric_limits<double>::infinity();
    }
  }
  return total;
}

// --- codebook stream ----------------------------------------------------------

struct CodebookStream::Impl {
  std::size_t n;
  int m;
  DlBudget budget;

  bool sparse_active = false;
  std::size_t k = 0;
  std::vector<std::size_t> support;
  std::vector<std::uint64_t> values;

  std::vector<CodebookEntry> pp;
  std::size_t pp_next = 0;

  bool literal_active = false;
  std::vector<std::uint64_t> literal;

  std::uint64_t top() const { return (std::uint64_t{1} << m) - 1; }

  void start_sparse_level() {
    support = first_combination(k, 0);
    values.assign(k, 1);
  }

  void advance_sparse() {
    if (next_tuple(values, 1, top())) return;
    values.assign(k, 1);
    if (k > 0 && next_combination(support, n)) return;
    ++k;
    sparse_active = k <= n && sparse_code_length(k, n, m) <= budget.bits;
    if (sparse_active) start_sparse_level();
  }

  CodebookEntry sparse_entry() const {
    std::vector<std::uint64_t> nums(n, 0);
    for (std::size_t j = 0; j < k; ++j) nums[support[j]] = values[j];
    CodebookEntry e;
    e.x = QuantizedVector(std::move(nums), m);
    e.codec = CodecId::sparse;
    e.stream = encode_sparse(e.x).payload;
    e.dl_bits = e.stream.size();
    return e;
  }
};

CodebookStream::CodebookStream(const CodebookSpec& spec, std::size_t n, int m, DlBudget budget,
                               std::uint64_t cap)
    : impl_(std::make_unique<Impl>()), cap_(cap) {
  if (n == 0) throw std::domain_error("signal length must be positive");
  if (m < 1 || m > kMaxResolutionBits) throw std::domain_error("resolution out of range");
  Impl& s = *impl_;
  s.n = n;
  s.m = m;
  s.budget = budget;
  if (spec.sparse && sparse_code_length(0, n, m) <= budget.bits) {
    s.sparse_active = true;
    s.start_sparse_level();
  }
  if (spec.piecewise_poly) s.pp = build_pp_list(n, m, spec.pp_max_degree, budget, cap);
  if (spec.literal && literal_code_length(n, m) <= budget.bits) {
    s.literal_active = true;
    s.literal.assign(n, 0);
  }
}

CodebookStream::~CodebookStream() = default;
CodebookStream::CodebookStream(CodebookStream&&) noexcept = default;
CodebookStream& CodebookStream::operator=(CodebookStream&&) noexcept = default;

std::optional<CodebookEntry> CodebookStream::next() {
  Impl& s = *impl_;
  // Equal dl across codecs is ordered by the header bits, i.e. codec id.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const std::size_t dl_sparse = s.sparse_active ? sparse_code_length(s.k, s.n, s.m) : none;
  const std::size_t dl_pp = s.pp_next < s.pp.size() ? s.pp[s.pp_next].dl_bits : none;
  const std::size_t dl_literal = s.literal_active ? literal_code_length(s.n, s.m) : none;
  const std::size_t best = std::min({dl_sparse, dl_pp, dl_literal});
  if (best == none) return std::nullopt;
  if (++yielded_ > cap_) throw ResourceError("codebook stream exceeds the candidate cap");

  if (dl_sparse == best) {
    auto e = s.sparse_entry();
    s.advance_sparse();
    return e;
  }
  if (dl_pp == best) return s.pp[s.pp_next++];
  CodebookEntry e;
  e.x = QuantizedVector(s.literal, s.m);
  e.codec = CodecId::literal;
  e.stream = encode_literal(e.x).payload;
  e.dl_bits = e.stream.size();
  s.literal_active = next_tuple(s.literal, 0, s.top());
  return e;
}

CodebookStream enumerate_codebook(const std::vector<SignalClassSpec>& classes, std::size_t n, int m,
                                  DlBudget budget, bool include_literals, std::uint64_t cap) {
  return CodebookStream(codebook_for(classes, include_literals), n, m, budget, cap);
}

// --- solver -----------------------------------------------------------------

RecoveryResult mcp_exact(const MeasurementEnsemble& ensemble, const Eigen::VectorXd& y,
                         DlBudget budget, std::optional<double> eta, const SolverConfig& config) {
  const int m = config.m;
  check_solver_inputs(ensemble, y, budget, m);
  const std::size_t n = ensemble.n;
  const double tol = eta ? *eta : ensemble.sigma_max * quantization_gap_bound(n, m);
  if (!(tol >= 0.0)) throw std::domain_error("residual tolerance must be nonnegative");

  RecoveryResult result;
  result.eta = tol;
  result.predicted_bound = predicted_error_bound(n, ensemble.d, m, config.tau, config.t);
  std::uint64_t examined = 0;

  auto take = [&](QuantizedVector x, CodecId codec, Bits stream, double residual) {
    if (result.feasible && !(stream.size() < result.dl_bits ||
                             (stream.size() == result.dl_bits && stream < result.stream))) {
      return;
    }
    result.feasible = true;
    result.x_hat_q = std::move(x);
    result.codec = codec;
    result.stream = std::move(stream);
    result.dl_bits = result.stream.size();
    result.residual = residual;
  };
  // True while a candidate of this (dl, stream) could still win.
  auto may_improve = [&](std::size_t dl, const Bits& stream) {
    return !result.feasible || dl < result.dl_bits ||
           (dl == result.dl_bits && stream < result.stream);
  };

  if (config.codebook.sparse) {
    SparseSearch search(ensemble.A, y, m, tol, config.candidate_cap, config.observer, examined);
    for (std::size_t k = 0; k <= n && sparse_code_length(k, n, m) <= budget.bits; ++k) {
      if (auto hit = search.level(k)) {
        auto x = sparse_vector(n, m, *hit);
        auto stream = encode_sparse(x).payload;
        take(std::move(x), CodecId::sparse, std::move(stream), hit->residual);
        break;
      }
    }
  }

  auto test_dense = [&](const QuantizedVector& x) {
    if (++examined > config.candidate_cap) {
      throw ResourceError("solver examined more candidates than the cap");
    }
    const double r = canonical_residual(ensemble.A, y, x);
    const bool feasible = r <= tol;
    if (config.observer) config.observer(x.to_real(), feasible);
    return std::pair{feasible, r};
  };

  if (config.codebook.piecewise_poly) {
    const auto list = build_pp_list(n, m, config.codebook.pp_max_degree, budget, config.candidate_cap);
    for (const auto& e : list) {
      if (!may_improve(e.dl_bits, e.stream)) break;
      if (auto [ok, r] = test_dense(e.x); ok) {
        take(e.x, CodecId::piecewise_poly, e.stream, r);
        break;
      }
    }
  }

  if (config.codebook.literal && literal_code_length(n, m) <= budget.bits) {
    std::vector<std::uint64_t> nums(n, 0);
    const std::uint64_t top = (std::uint64_t{1} << m) - 1;
    do {
      QuantizedVector x(nums, m);
      auto stream = encode_literal(x).payload;
      if (!may_improve(stream.size(), stream)) break;
      if (auto [ok, r] = test_dense(x); ok) {
        take(std::move(x), CodecId::literal, std::move(stream), r);
        break;
      }
    } while (next_tuple(nums, 0, top));
  }

  result.candidates_examined = examined;
  if (result.feasible) {
    result.x_hat = result.x_hat_q.to_real();
  } else {
    result.x_hat_q = QuantizedVector(n, m);
    result.x_hat = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    result.residual = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

RecoveryResult mcp_tolerant(const MeasurementEnsemble& ensemble, const Eigen::VectorXd& y,
                            double epsilon_n, DlBudget budget, const SolverConfig& config) {
  if (!(epsilon_n >= 0.0)) throw std::domain_error("epsilon_n must be nonnegative");
  const double eta =
      ensemble.sigma_max * (epsilon_n + quantization_gap_bound(ensemble.n, config.m));
  return mcp_exact(ensemble, y, budget, eta, config);
}

void score_recovery(RecoveryResult& result, const Eigen::VectorXd& x_o, double threshold) {
  if (!result.feasible) {
    result.l2_error = std::numeric_limits<double>::quiet_NaN();
    result.within_bound = false;
    return;
  }
  result.l2_error = (result.x_hat - x_o).norm();
  result.within_bound = result.l2_error <= threshold;
}

DlBudget difference_budget(double kappa, double delta, int m, int c_pair) {
  const double bits = std::ceil(2.0 * (kappa + delta) * m - 1e-9) + c_pair;
  return {static_cast<std::size_t>(std::max(bits, 0.0))};
}

double predicted_error_bound(std::size_t n, std::size_t d, int m, double tau, double t) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::domain_error("tau must lie in (0, 1)");
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  const double sigma = std::sqrt(static_cast<double>(n) / static_cast<double>(d)) + 1.0 + t;
  return (sigma / tau + 1.0) * quantization_gap_bound(n, m);
}

CorollaryBound corollary_error_bound(std::size_t n, double alpha, double kappa) {
  if (!(alpha > 0.0) || !(kappa > 0.0) || n < 2) {
    throw std::domain_error("corollary bound needs alpha > 0, kappa > 0, n >= 2");
  }
  const double nn = static_cast<double>(n);
  return {10.0 * std::pow(nn, 0.5 - alpha) / (std::sqrt(kappa) * std::log2(nn)),
          std::pow(nn, -alpha * kappa)};
}

}  // namespace mcp
