#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "mcp/measure.hpp"
#include "mcp/rng.hpp"

namespace {

TEST(Ensemble, EntryVarianceAtDFour) {
  // 4 x 250000 = 1e6 entries with variance 1/4.
  const Eigen::MatrixXd A = mcp::gaussian_matrix(4, 250000, 42);
  const double mean = A.mean();
  const double var = (A.array() - mean).square().sum() / (A.size() - 1);
  EXPECT_NEAR(var, 0.25, 0.25 * 0.02);
  EXPECT_NEAR(mean, 0.0, 0.005);
}

TEST(Ensemble, UnitColumnExpectation) {
  const Eigen::MatrixXd A = mcp::gaussian_matrix(20, 20000, 5);
  const double mean_sq = A.colwise().squaredNorm().mean();
  EXPECT_NEAR(mean_sq, 1.0, 0.01);
}

TEST(Ensemble, Deterministic) {
  const auto a = mcp::sample_ensemble(10, 30, 99);
  const auto b = mcp::sample_ensemble(10, 30, 99);
  EXPECT_TRUE((a.A.array() == b.A.array()).all());
  EXPECT_EQ(a.sigma_max, b.sigma_max);
  const auto c = mcp::sample_ensemble(10, 30, 100);
  EXPECT_FALSE((a.A.array() == c.A.array()).all());
  // Entry (i, j) depends only on (seed, i * n + j).
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 30; ++j) {
      EXPECT_EQ(a.A(i, j), mcp::counter_normal(99, i * 30 + j) * (1.0 / std::sqrt(10.0)));
    }
  }
}

TEST(Ensemble, RejectsZeroDimensions) {
  EXPECT_THROW(mcp::sample_ensemble(0, 4, 1), std::domain_error);
  EXPECT_THROW(mcp::sample_ensemble(4, 0, 1), std::domain_error);
}

TEST(SigmaMax, MatchesSvd) {
  for (auto [d, n] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 40}, {40, 256}, {30, 30}, {50, 8}}) {
    const auto e = mcp::sample_ensemble(d, n, d * 1000 + n);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e.A);
    EXPECT_NEAR(e.sigma_max, svd.singularValues()(0), 1e-6 * svd.singularValues()(0))
        << d << "x" << n;
  }
}

TEST(ChiBound, FrozenValues) {
  EXPECT_NEAR(mcp::chi_square_lower_tail_bound(1, 0.5), 0.9079430794, 1e-9);
  EXPECT_NEAR(mcp::chi_square_lower_tail_bound(100, 0.5), 6.39531977e-5, 1e-12);
  EXPECT_GT(mcp::chi_square_lower_tail_bound(10, 1e-6), 0.999999);
  EXPECT_THROW(mcp::chi_square_lower_tail_bound(10, 0.0), std::domain_error);
  EXPECT_THROW(mcp::chi_square_lower_tail_bound(10, 1.0), std::domain_error);
}

TEST(ChiBound, DominatesExactProbabilityAtDOne) {
  // P(Z^2 < 0.5) = erf(0.5).
  const double exact = std::erf(0.5);
  EXPECT_NEAR(exact, 0.5204998778, 1e-9);
  EXPECT_LE(exact, mcp::chi_square_lower_tail_bound(1, 0.5));
}

TEST(SigmaBound, FrozenValues) {
  EXPECT_NEAR(mcp::sigma_max_tail_bound(40, 1.0), 2.06115362e-9, 1e-16);
  EXPECT_NEAR(mcp::sigma_max_tail_bound(10, 0.5), 0.2865047969, 1e-9);
  EXPECT_LT(mcp::sigma_max_tail_bound(10, 100.0), 1e-300);
}

TEST(InjectivityBound, Values) {
  const double single = mcp::injectivity_single_bound(40, 0.04);
  EXPECT_NEAR(single, std::exp(20.0 * (1 - 0.0016 + 2 * std::log(0.04))), 1e-20);
  EXPECT_NEAR(mcp::injectivity_union_bound(40, 0.04, 10), single * 2048, 1e-18);
}

TEST(ChiLemma, ExamplesPass) {
  const auto r = mcp::mc_check_chi_lemma(50, 0.9, 20000, 3);
  EXPECT_EQ(r.events, 0U);
  EXPECT_TRUE(r.pass);
  const auto s = mcp::mc_check_chi_lemma(100, 0.5, 20000, 4);
  EXPECT_NEAR(s.bound, 6.39531977e-5, 1e-12);
  EXPECT_TRUE(s.pass);
  EXPECT_LE(s.empirical, s.bound + 3 * s.sigma);
}

TEST(ChiLemma, InvariantAcrossUnitVectors) {
  const std::size_t trials = 40000;
  std::vector<Eigen::VectorXd> xs;
  xs.push_back(Eigen::VectorXd::Unit(4, 0));
  xs.push_back(Eigen::VectorXd::Constant(4, 0.5));
  Eigen::VectorXd v(6);
  v << 0.1, -0.3, 0.5, 0.2, -0.7, 0.3;
  xs.push_back(v.normalized());
  // p = P(chi2_10 < 5) ~ 0.109; three unit vectors must agree within
  // Monte-Carlo noise.
  std::vector<double> freq;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    freq.push_back(mcp::mc_check_chi_lemma(10, 0.5, trials, 100 + j, xs[j]).empirical);
  }
  const double sd = std::sqrt(0.109 * 0.891 / trials);
  for (double f : freq) {
    EXPECT_NEAR(f, freq[0], 5 * sd * std::sqrt(2.0));
    EXPECT_NEAR(f, 0.1088, 5 * sd);
  }
}

TEST(ChiLemma, WorkerCountDoesNotMatter) {
  const auto a = mcp::mc_check_chi_lemma(10, 0.5, 3000, 7, std::nullopt, 1);
  const auto b = mcp::mc_check_chi_lemma(10, 0.5, 3000, 7, std::nullopt, 4);
  EXPECT_EQ(a.events, b.events);
}

TEST(SigmaTail, ExamplesPass) {
  const auto r = mcp::sigma_max_tail_check(10, 10, 0.5, 2000, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.empirical, r.bound);
  const auto s = mcp::sigma_max_tail_check(40, 256, 1.0, 300, 6);
  EXPECT_EQ(s.events, 0U);
}

TEST(Injectivity, TallMatrixPasses) {
  const auto e = mcp::sample_ensemble(64, 16, 8);
  mcp::Rng rng(9);
  std::vector<mcp::QuantizedVector> cands;
  for (int j = 0; j < 200; ++j) {
    std::vector<std::uint64_t> nums(16);
    for (auto& v : nums) v = rng.below(16);
    nums[0] |= 1;
    cands.emplace_back(std::move(nums), 4);
  }
  for (bool ok : mcp::null_space_injectivity_check(e.A, cands, 0.04)) EXPECT_TRUE(ok);
}

TEST(Injectivity, NullVectorFails) {
  // A column of zeros makes e_1 a null vector.
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(3, 3);
  A.col(0).setZero();
  const std::vector<Eigen::VectorXd> cands{Eigen::VectorXd::Unit(3, 0), Eigen::VectorXd::Unit(3, 1)};
  const auto ok = mcp::null_space_injectivity_check(A, cands, 0.5);
  EXPECT_FALSE(ok[0]);
  EXPECT_TRUE(ok[1]);
  EXPECT_THROW(mcp::null_space_injectivity_check(A, {Eigen::VectorXd::Zero(3)}, 0.5),
               std::domain_error);
  EXPECT_THROW(mcp::null_space_injectivity_check(A, {Eigen::VectorXd::Ones(4)}, 0.5),
               std::domain_error);
}

TEST(Injectivity, UnionBoundEmpirical) {
  // Every nonzero 4-entry vector at m = 1 (15 of them) against fresh
  // ensembles: the frequency of "some candidate fails" stays below
  // 2^(B+1) times the single-vector bound.
  std::vector<Eigen::VectorXd> cands;
  for (int mask = 1; mask < 16; ++mask) {
    Eigen::VectorXd y(4);
    for (int i = 0; i < 4; ++i) y(i) = (mask >> i) & 1 ? 0.5 : 0.0;
    cands.push_back(y);
  }
  const std::size_t d = 3;
  const double tau = 0.2;
  const int trials = 4000;
  int failures = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const auto A = mcp::gaussian_matrix(d, 4, mcp::derive_seed(77, trial));
    for (bool ok : mcp::null_space_injectivity_check(A, cands, tau)) {
      if (!ok) {
        ++failures;
        break;
      }
    }
  }
  // 15 candidates < 2^(B+1) with B = 3.
  const double bound = mcp::injectivity_union_bound(d, tau, 3);
  ASSERT_LT(bound, 1.0);
  EXPECT_LE(failures / double(trials), bound);
}

TEST(Projection, DifferenceTwoWays) {
  const auto e = mcp::sample_ensemble(40, 256, 10);
  mcp::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXd x(256), y(256);
    for (auto& v : x) v = rng.uniform();
    for (auto& v : y) v = rng.uniform();
    const Eigen::VectorXd direct = e.A * (x - y);
    const Eigen::VectorXd split = e.A * x - e.A * y;
    ASSERT_LE((direct - split).norm(), 1e-10 * (x - y).norm());
  }
}

TEST(EnsembleFile, RoundTrip) {
  const auto e = mcp::sample_ensemble(7, 13, 0xDEADBEEFULL);
  std::stringstream ss;
  mcp::write_ensemble(ss, e);
  EXPECT_EQ(ss.str().size(), 4U + 24U);
  EXPECT_EQ(ss.str().substr(0, 4), "MCPE");
  const auto r = mcp::read_ensemble(ss);
  EXPECT_EQ(r.d, 7U);
  EXPECT_EQ(r.n, 13U);
  EXPECT_EQ(r.seed, 0xDEADBEEFULL);
  EXPECT_TRUE((r.A.array() == e.A.array()).all());
  EXPECT_EQ(r.sigma_max, e.sigma_max);

  std::stringstream bad("XXXX");
  EXPECT_THROW(mcp::read_ensemble(bad), std::runtime_error);
  std::stringstream truncated(ss.str().substr(0, 10));
  EXPECT_THROW(mcp::read_ensemble(truncated), std::runtime_error);
}

}  // namespace
