#include "mcp/signals.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mcp {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double nonzero_uniform(Rng& rng) {
  double u;
  do {
    u = rng.uniform();
  } while (u == 0.0);
  return u;
}

// First k entries of a uniform random permutation of [lo, hi).
std::vector<std::size_t> sample_subset(std::size_t lo, std::size_t hi, std::size_t k, Rng& rng) {
  std::vector<std::size_t> pool(hi - lo);
  std::iota(pool.begin(), pool.end(), lo);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

double lp_sum(const Eigen::VectorXd& x, double p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
  return s;
}

}  // namespace

std::string describe(const SignalClassSpec& spec) {
  return std::visit(
      overloaded{
          [](const SparseClass& c) { return "sparse(k=" + std::to_string(c.k) + ")"; },
          [](const PiecewisePolyClass& c) {
            return "piecewise_poly(Q=" + std::to_string(c.Q) + ",N=" + std::to_string(c.N) + ")";
          },
          [](const LpBallClass& c) {
            std::ostringstream s;
            s << "lp_ball(p=" << c.p << ")";
            return s.str();
          },
          [](const SmoothClass& c) {
            std::ostringstream s;
            s << "smooth(beta=" << c.beta << ",gamma=" << c.gamma << ")";
            return s.str();
          },
      },
      spec);
}

Eigen::VectorXd gen_sparse(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw std::domain_error("gen_sparse: k exceeds n");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i : sample_subset(0, n, k, rng)) {
    x(static_cast<Eigen::Index>(i)) = nonzero_uniform(rng);
  }
  return x;
}

PiecewisePolyDraw gen_piecewise_poly(std::size_t n, std::size_t Q, int N, Rng& rng,
                                     std::optional<int> coefficient_bits) {
  if (n == 0 || Q >= n) throw std::domain_error("gen_piecewise_poly: need Q < n");
  if (N < 0) throw std::domain_error("gen_piecewise_poly: degree must be nonnegative");
  PiecewisePolyDraw draw;
  const auto cuts = sample_subset(1, n, Q, rng);
  for (std::size_t c : cuts) {
    draw.spec.breakpoints.push_back(static_cast<double>(c) / static_cast<double>(n));
  }
  for (std::size_t piece = 0; piece <= Q; ++piece) {
    std::vector<double> u(N + 1);
    double total = 0.0;
    for (double& v : u) total += (v = rng.uniform());
    const double mass = rng.uniform();  // coefficient sum, < 1
    std::vector<double> coeffs(N + 1, 0.0);
    for (int j = 0; j <= N; ++j) {
      double a = total > 0.0 ? u[j] / total * mass : 0.0;
      if (coefficient_bits) a = truncate_bits(a, *coefficient_bits).value();
      coeffs[j] = a;
    }
    draw.spec.coefficients.push_back(std::move(coeffs));
  }

  draw.samples.resize(static_cast<Eigen::Index>(n));
  std::size_t piece = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (piece < cuts.size() && i >= cuts[piece]) ++piece;
    const double t = static_cast<double>(i) / static_cast<double>(n);
    double v = 0.0;
    for (int j = N; j >= 0; --j) v = v * t + draw.spec.coefficients[piece][j];
    draw.samples(static_cast<Eigen::Index>(i)) = v;
  }
  return draw;
}

Eigen::VectorXd gen_lp_ball(std::size_t n, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("gen_lp_ball: p must lie in (0, 1]");
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.uniform();
  const double s = lp_sum(x, p);
  if (s > 1.0) {
    x *= std::pow(s, -1.0 / p);
    // Rounding can leave the sum a few ulps above one.
    while (lp_sum(x, p) > 1.0) x *= 1.0 - 1e-15;
  }
  return x;
}

double lp_tail_constant(double p) { return std::sqrt(p / (2.0 - p)); }

ApproxResult top_k_approx(const Eigen::VectorXd& x, std::size_t k, double p) {
  const auto n = static_cast<std::size_t>(x.size());
  if (k > n) throw std::domain_error("top_k_approx: k exceeds n");
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("top_k_approx: p must lie in (0, 1]");
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return std::abs(x(a)) > std::abs(x(b)); });
  ApproxResult out;
  out.x_tilde = Eigen::VectorXd::Zero(x.size());
  for (std::size_t i = 0; i < k; ++i) out.x_tilde(order[i]) = x(order[i]);
  // With no terms kept the error is ||x||_2 <= ||x||_p <= 1.
  out.epsilon = k == 0 ? 1.0
                       : lp_tail_constant(p) * std::pow(static_cast<double>(k), 0.5 - 1.0 / p);
  out.dl_class = SparseClass{k};
  return out;
}

ApproxResult piecewise_poly_fit(const Eigen::VectorXd& samples, double r, int beta, double gamma) {
  if (!(r > 0.0 && r <= 1.0)) throw std::domain_error("piecewise_poly_fit: r must lie in (0, 1]");
  if (beta < 0) throw std::domain_error("piecewise_poly_fit: beta must be nonnegative");
  const Eigen::Index n = samples.size();
  const auto pieces = static_cast<std::size_t>(std::ceil(1.0 / r - 1e-12));

  std::vector<std::vector<Eigen::Index>> members(pieces);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n);
    auto j = static_cast<std::size_t>(std::floor(t / r));
    members[std::min(j, pieces - 1)].push_back(i);
  }

  ApproxResult out;
  out.x_tilde = Eigen::VectorXd::Zero(n);
  for (const auto& idx : members) {
    if (idx.empty()) continue;
    // Interpolation nodes spread across the piece.
    std::vector<Eigen::Index> nodes;
    if (idx.size() <= static_cast<std::size_t>(beta) + 1) {
      nodes = idx;
    } else {
      for (int q = 0; q <= beta; ++q) {
        const double pos = static_cast<double>(q) * static_cast<double>(idx.size() - 1) / beta;
        nodes.push_back(idx[static_cast<std::size_t>(std::lround(pos))]);
      }
    }
    // Newton divided differences in the local coordinate s = t - t0.
    const double t0 = static_cast<double>(idx.front()) / static_cast<double>(n);
    std::vector<double> s(nodes.size()), coef(nodes.size());
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      s[a] = static_cast<double>(nodes[a]) / static_cast<double>(n) - t0;
      coef[a] = samples(nodes[a]);
    }
    for (std::size_t level = 1; level < nodes.size(); ++level) {
      for (std::size_t a = nodes.size() - 1; a >= level; --a) {
        coef[a] = (coef[a] - coef[a - 1]) / (s[a] - s[a - level]);
      }
    }
    for (Eigen::Index i : idx) {
      const double si = static_cast<double>(i) / static_cast<double>(n) - t0;
      double v = coef.back();
      for (std::size_t a = nodes.size() - 1; a-- > 0;) v = v * (si - s[a]) + coef[a];
      out.x_tilde(i) = v;
    }
  }
  out.epsilon = gamma * std::sqrt(static_cast<double>(n)) * std::pow(r, beta + 1);
  out.dl_class = PiecewisePolyClass{pieces - 1, beta};
  return out;
}

void write_signal_csv(std::ostream& out, const Eigen::VectorXd& x) {
  char buf[64];
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto res = std::to_chars(buf, buf + sizeof buf, x(i));
    out.write(buf, res.ptr - buf);
    out.put('\n');
  }
}

Eigen::VectorXd read_signal_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v = 0.0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), v);
    if (res.ec != std::errc{} || res.ptr != line.data() + line.size()) {
      throw std::runtime_error("signal CSV: cannot parse '" + line + "'");
    }
    values.push_back(v);
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace mcp
