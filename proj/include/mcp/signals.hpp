#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <Eigen/Core>

#include "mcp/codecs.hpp"
#include "mcp/rng.hpp"

namespace mcp {

struct SparseClass {
  std::size_t k = 0;
};
struct PiecewisePolyClass {
  std::size_t Q = 0;
  int N = 0;
};
struct LpBallClass {
  double p = 1.0;
};
struct SmoothClass {
  int beta = 0;
  double gamma = 1.0;
};

using SignalClassSpec = std::variant<SparseClass, PiecewisePolyClass, LpBallClass, SmoothClass>;

std::string describe(const SignalClassSpec& spec);

// x_tilde approximates x with ||x - x_tilde||_2 <= epsilon whenever the class
// preconditions hold.
struct ApproxResult {
  Eigen::VectorXd x_tilde;
  double epsilon = 0.0;
  SignalClassSpec dl_class;
};

// Exactly k nonzero entries, iid uniform on (0, 1), support uniform over
// k-subsets. Throws std::domain_error if k > n.
Eigen::VectorXd gen_sparse(std::size_t n, std::size_t k, Rng& rng);

struct PiecewisePolyDraw {
  Eigen::VectorXd samples;
  PiecewisePoly spec;
};

// Samples at i/n of a function with Q grid-aligned breakpoints and degree-N
// pieces whose nonnegative coefficients sum below one. With
// coefficient_bits set, coefficients are drawn on the 2^-bits grid so the
// piecewise-polynomial codec represents the draw exactly at matching m.
PiecewisePolyDraw gen_piecewise_poly(std::size_t n, std::size_t Q, int N, Rng& rng,
                                     std::optional<int> coefficient_bits = std::nullopt);

// Nonnegative vector with sum x_i^p <= 1: iid uniforms, rescaled onto the
// ball boundary when they fall outside.
Eigen::VectorXd gen_lp_ball(std::size_t n, double p, Rng& rng);

// (p / (2 - p))^(1/2), the integral-comparison constant in the top-k tail bound.
double lp_tail_constant(double p);

// Keep the k largest-magnitude entries (ties keep the lower index).
// epsilon = lp_tail_constant(p) * k^(1/2 - 1/p).
ApproxResult top_k_approx(const Eigen::VectorXd& x, std::size_t k, double p);

// Degree-beta interpolation on each subinterval [j r, (j+1) r) through beta+1
// of the samples it contains. epsilon = gamma * sqrt(n) * r^(beta+1), valid
// when the samples come from f with |f^(beta+1)| <= gamma.
ApproxResult piecewise_poly_fit(const Eigen::VectorXd& samples, double r, int beta, double gamma);

// One value per line, shortest round-trip decimal form.
void write_signal_csv(std::ostream& out, const Eigen::VectorXd& x);
Eigen::VectorXd read_signal_csv(std::istream& in);

}  // namespace mcp
