#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "mcp/quantize.hpp"

namespace mcp {

// Default separation constant for the null-space event.
inline constexpr double kDefaultTau = 0.04;

// Immutable d x n Gaussian measurement matrix with entries N(0, 1/d).
// Entry (i, j) is counter_normal(seed, i * n + j) / sqrt(d), so the matrix
// is a pure function of (d, n, seed).
struct MeasurementEnsemble {
  std::size_t d = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  Eigen::MatrixXd A;
  double sigma_max = 0.0;
};

// Throws std::domain_error for zero dimensions.
Eigen::MatrixXd gaussian_matrix(std::size_t d, std::size_t n, std::uint64_t seed);
MeasurementEnsemble sample_ensemble(std::size_t d, std::size_t n, std::uint64_t seed);

// Largest singular value by power iteration on the smaller Gram matrix,
// stopped once the Rayleigh quotient changes by less than rel_tol.
double largest_singular_value(const Eigen::MatrixXd& A, double rel_tol = 1e-8);

// exp((d/2)(tau + ln(1 - tau))). Throws std::domain_error unless 0 < tau < 1
// and d >= 1.
double chi_square_lower_tail_bound(std::size_t d, double tau);

// exp(-d t^2 / 2).
double sigma_max_tail_bound(std::size_t d, double t);

// exp((d/2)(1 - tau^2 + 2 ln tau)): probability that one fixed unit vector
// lands inside the tau-cone around the null space.
double injectivity_single_bound(std::size_t d, double tau);

// 2^(budget+1) * injectivity_single_bound, the union bound over every
// difference vector of a codebook with fewer than 2^(budget+1) members.
double injectivity_union_bound(std::size_t d, double tau, double budget_bits);

struct MonteCarloCheck {
  std::size_t trials = 0;
  std::size_t events = 0;
  double empirical = 0.0;
  double bound = 0.0;
  // Binomial standard deviation at p = min(bound, 1).
  double sigma = 0.0;
  bool pass = false;
};

// Frequency of ||A x||^2 < 1 - tau for a fixed unit x, one fresh ensemble
// per trial (trial seed derive_seed(seed, trial)). x defaults to the unit
// vector (1/2, 1/2, 1/2, 1/2). Passes when empirical <= bound + 3 sigma.
MonteCarloCheck mc_check_chi_lemma(std::size_t d, double tau, std::size_t trials,
                                   std::uint64_t seed,
                                   std::optional<Eigen::VectorXd> x = std::nullopt,
                                   unsigned workers = 0);

// Frequency of sigma_max(A) - 1 - sqrt(n/d) > t against exp(-d t^2 / 2).
MonteCarloCheck sigma_max_tail_check(std::size_t d, std::size_t n, double t, std::size_t trials,
                                     std::uint64_t seed, unsigned workers = 0);

// Per candidate: ||A y||_2 >= tau ||y||_2. Throws std::domain_error for a
// zero candidate or a length mismatch.
std::vector<bool> null_space_injectivity_check(const Eigen::MatrixXd& A,
                                               const std::vector<QuantizedVector>& candidates,
                                               double tau);
std::vector<bool> null_space_injectivity_check(const Eigen::MatrixXd& A,
                                               const std::vector<Eigen::VectorXd>& candidates,
                                               double tau);

// Binary header "MCPE" then d, n, seed as little-endian u64. The matrix is
// regenerated from the seed on read.
void write_ensemble(std::ostream& out, const MeasurementEnsemble& ensemble);
MeasurementEnsemble read_ensemble(std::istream& in);

}  // namespace mcp
