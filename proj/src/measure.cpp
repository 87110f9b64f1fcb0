#include "mcp/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "mcp/parallel.hpp"
#include "mcp/rng.hpp"

namespace mcp {
namespace {

constexpr std::array<char, 4> kEnsembleMagic = {'M', 'C', 'P', 'E'};

MonteCarloCheck finish(std::size_t trials, std::size_t events, double bound) {
  MonteCarloCheck r;
  r.trials = trials;
  r.events = events;
  r.empirical = static_cast<double>(events) / static_cast<double>(trials);
  r.bound = bound;
  const double p0 = std::min(bound, 1.0);
  r.sigma = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(trials));
  r.pass = r.empirical <= r.bound + 3.0 * r.sigma;
  return r;
}

std::size_t count_events(std::size_t trials, unsigned workers,
                         const std::function<bool(std::size_t)>& event) {
  std::vector<char> hit(trials, 0);
  parallel_for(trials, workers, [&](std::size_t i) { hit[i] = event(i) ? 1 : 0; });
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size())) {
    throw std::runtime_error("ensemble file truncated");
  }
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

Eigen::MatrixXd gaussian_matrix(std::size_t d, std::size_t n, std::uint64_t seed) {
  if (d == 0 || n == 0) throw std::domain_error("measurement matrix needs d >= 1 and n >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Eigen::MatrixXd A(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          counter_normal(seed, i * n + j) * scale;
    }
  }
  return A;
}

MeasurementEnsemble sample_ensemble(std::size_t d, std::size_t n, std::uint64_t seed) {
  MeasurementEnsemble e;
  e.d = d;
  e.n = n;
  e.seed = seed;
  e.A = gaussian_matrix(d, n, seed);
  e.sigma_max = largest_singular_value(e.A);
  return e;
}

double largest_singular_value(const Eigen::MatrixXd& A, double rel_tol) {
  const Eigen::MatrixXd G =
      A.rows() <= A.cols() ? Eigen::MatrixXd(A * A.transpose()) : Eigen::MatrixXd(A.transpose() * A);
  const Eigen::Index k = G.rows();
  if (k == 0) return 0.0;
  // Fixed pseudo-random start: almost surely not orthogonal to the top
  // eigenvector.
  Eigen::VectorXd v(k);
  for (Eigen::Index i = 0; i < k; ++i) v(i) = 1.0 + 0.5 * counter_normal(0x5eed, static_cast<std::uint64_t>(i));
  v.normalize();
  double lambda = v.dot(G * v);
  for (int iter = 0; iter < 100000; ++iter) {
    Eigen::VectorXd w = G * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    v = w / norm;
    const double next = v.dot(G * v);
    // Per-step change understates the remaining error under slow
    // convergence, hence the extra factor.
    const bool done = std::abs(next - lambda) <= rel_tol * 1e-2 * std::abs(next);
    lambda = next;
    if (done) break;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

double chi_square_lower_tail_bound(std::size_t d, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::domain_error("tau must lie in (0, 1)");
  if (d == 0) throw std::domain_error("d must be at least 1");
  return std::exp(0.5 * static_cast<double>(d) * (tau + std::log1p(-tau)));
}

double sigma_max_tail_bound(std::size_t d, double t) {
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  return std::exp(-0.5 * static_cast<double>(d) * t * t);
}

double injectivity_single_bound(std::size_t d, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw std::domain_error("tau must lie in (0, 1)");
  return std::exp(0.5 * static_cast<double>(d) * (1.0 - tau * tau + 2.0 * std::log(tau)));
}

double injectivity_union_bound(std::size_t d, double tau, double budget_bits) {
  return std::exp2(budget_bits + 1.0) * injectivity_single_bound(d, tau);
}

MonteCarloCheck mc_check_chi_lemma(std::size_t d, double tau, std::size_t trials,
                                   std::uint64_t seed, std::optional<Eigen::VectorXd> x,
                                   unsigned workers) {
  const double bound = chi_square_lower_tail_bound(d, tau);
  if (trials == 0) throw std::domain_error("trials must be at least 1");
  const Eigen::VectorXd u = x ? *x : Eigen::VectorXd::Constant(4, 0.5);
  if (std::abs(u.norm() - 1.0) > 1e-12) throw std::domain_error("x must be a unit vector");
  const double threshold = 1.0 - tau;
  const auto n = static_cast<std::size_t>(u.size());
  const std::size_t events = count_events(trials, workers, [&](std::size_t trial) {
    const Eigen::MatrixXd A = gaussian_matrix(d, n, derive_seed(seed, trial));
    return (A * u).squaredNorm() < threshold;
  });
  return finish(trials, events, bound);
}

MonteCarloCheck sigma_max_tail_check(std::size_t d, std::size_t n, double t, std::size_t trials,
                                     std::uint64_t seed, unsigned workers) {
  const double bound = sigma_max_tail_bound(d, t);
  if (trials == 0) throw std::domain_error("trials must be at least 1");
  const double threshold = 1.0 + std::sqrt(static_cast<double>(n) / static_cast<double>(d)) + t;
  const std::size_t events = count_events(trials, workers, [&](std::size_t trial) {
    return largest_singular_value(gaussian_matrix(d, n, derive_seed(seed, trial))) > threshold;
  });
  return finish(trials, events, bound);
}

std::vector<bool> null_space_injectivity_check(const Eigen::MatrixXd& A,
                                               const std::vector<Eigen::VectorXd>& candidates,
                                               double tau) {
  std::vector<bool> out;
  out.reserve(candidates.size());
  for (const auto& y : candidates) {
    if (y.size() != A.cols()) throw std::domain_error("candidate length differs from n");
    const double norm = y.norm();
    if (norm == 0.0) throw std::domain_error("injectivity check needs nonzero candidates");
    out.push_back((A * y).norm() >= tau * norm);
  }
  return out;
}

std::vector<bool> null_space_injectivity_check(const Eigen::MatrixXd& A,
                                               const std::vector<QuantizedVector>& candidates,
                                               double tau) {
  std::vector<Eigen::VectorXd> real;
  real.reserve(candidates.size());
  for (const auto& c : candidates) real.push_back(c.to_real());
  return null_space_injectivity_check(A, real, tau);
}

void write_ensemble(std::ostream& out, const MeasurementEnsemble& ensemble) {
  out.write(kEnsembleMagic.data(), kEnsembleMagic.size());
  put_u64(out, ensemble.d);
  put_u64(out, ensemble.n);
  put_u64(out, ensemble.seed);
}

MeasurementEnsemble read_ensemble(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kEnsembleMagic) {
    throw std::runtime_error("not an ensemble file");
  }
  const std::uint64_t d = get_u64(in);
  const std::uint64_t n = get_u64(in);
  const std::uint64_t seed = get_u64(in);
  return sample_ensemble(d, n, seed);
}

}  // namespace mcp
