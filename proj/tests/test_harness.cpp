#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "mcp/harness.hpp"

namespace {

mcp::ExperimentConfig small_scan() {
  mcp::ExperimentConfig cfg;
  cfg.signal_class = mcp::SparseClass{1};
  cfg.n = 32;
  cfg.m = 4;
  cfg.d_grid = {3, 10};
  cfg.trials = 6;
  cfg.master_seed = 5;
  return cfg;
}

std::string records_csv(const std::vector<mcp::ExperimentRecord>& recs) {
  std::ostringstream out;
  mcp::write_records_csv(out, recs);
  return out.str();
}

TEST(Csv, Quoting) {
  EXPECT_EQ(mcp::csv_quote("plain"), "plain");
  EXPECT_EQ(mcp::csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(mcp::csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(mcp::csv_quote("two\nlines"), "\"two\nlines\"");
}

TEST(Csv, DoubleFormatting) {
  EXPECT_EQ(mcp::format_double(0.1), "0.1");
  EXPECT_EQ(mcp::format_double(std::numeric_limits<double>::quiet_NaN()), "");
  const double v = 0.12345678901234567;
  EXPECT_EQ(std::stod(mcp::format_double(v)), v);
}

TEST(Scan, RecordsOrderedAndSeeded) {
  const auto cfg = small_scan();
  const auto recs = mcp::run_phase_scan(cfg);
  ASSERT_EQ(recs.size(), 12U);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(recs[i].cell, i / 6);
    EXPECT_EQ(recs[i].trial, i % 6);
    EXPECT_EQ(recs[i].d, cfg.d_grid[i / 6]);
    EXPECT_EQ(recs[i].seed, mcp::derive_seed(cfg.master_seed, recs[i].trial, recs[i].cell));
  }
}

TEST(Scan, SuccessRecomputableFromFields) {
  const auto recs = mcp::run_phase_scan(small_scan());
  for (const auto& r : recs) {
    const bool expect = r.status == "ok" && r.l2_error <= r.threshold;
    EXPECT_EQ(r.success, expect);
    EXPECT_EQ(r.e2_pass, r.sigma_max <= 1 + std::sqrt(double(r.n) / r.d) + r.t);
    EXPECT_DOUBLE_EQ(r.predicted_bound, mcp::predicted_error_bound(r.n, r.d, r.m, r.tau, r.t));
    EXPECT_EQ(r.threshold, r.predicted_bound);
    EXPECT_EQ(r.budget_bits, mcp::difference_budget(r.kappa, r.delta, r.m).bits);
    if (r.status == "ok") {
      EXPECT_LE(r.residual, r.eta);
      EXPECT_LE(r.dl_bits, r.budget_bits);
    }
  }
}

TEST(Scan, CsvDeterministicAcrossWorkers) {
  auto a = small_scan();
  a.workers = 1;
  auto b = small_scan();
  b.workers = 3;
  const std::string csv_a = records_csv(mcp::run_phase_scan(a));
  EXPECT_EQ(csv_a, records_csv(mcp::run_phase_scan(b)));
  EXPECT_EQ(csv_a, records_csv(mcp::run_phase_scan(a)));
  EXPECT_EQ(std::count(csv_a.begin(), csv_a.end(), '\n'), 13);
}

TEST(Scan, InfeasibleBudgetContinues) {
  auto cfg = small_scan();
  // Enough for the zero vector only.
  cfg.budget_bits = 2 + 11 + 1;
  const auto recs = mcp::run_phase_scan(cfg);
  for (const auto& r : recs) {
    EXPECT_NE(r.status, "resource_limit");
    if (r.status == "infeasible") {
      EXPECT_FALSE(r.success);
      EXPECT_TRUE(std::isnan(r.l2_error));
    }
  }
}

TEST(Summary, CountsAndMedian) {
  std::vector<mcp::ExperimentRecord> recs(3);
  for (std::size_t i = 0; i < 3; ++i) {
    recs[i].cell = 0;
    recs[i].trial = i;
    recs[i].status = "ok";
    recs[i].l2_error = double(i + 1);
    recs[i].success = i < 2;
    recs[i].e1_pass = true;
    recs[i].e2_pass = true;
  }
  recs[1].status = "infeasible";
  recs[1].success = false;
  const auto s = mcp::summarize(recs);
  ASSERT_EQ(s.size(), 1U);
  EXPECT_EQ(s[0].trials, 3U);
  EXPECT_EQ(s[0].successes, 1U);
  EXPECT_EQ(s[0].violations, 2U);
  EXPECT_DOUBLE_EQ(s[0].median_error, 3.0);
  EXPECT_NEAR(s[0].success_rate, 1.0 / 3.0, 1e-15);
}

TEST(Mismatch, LpClassFlagsAndChainBound) {
  mcp::ExperimentConfig cfg;
  cfg.signal_class = mcp::LpBallClass{0.5};
  cfg.n = 16;
  cfg.d_grid = {};
  cfg.trials = 4;
  const auto recs = mcp::run_mismatch_scan(cfg);
  ASSERT_EQ(recs.size(), 4U);
  for (const auto& r : recs) {
    EXPECT_EQ(r.d, 8U);  // k = 2, d = ceil(2 log2 16)
    EXPECT_TRUE(r.approx_within);
    EXPECT_DOUBLE_EQ(r.epsilon, r.approx_epsilon);
    EXPECT_DOUBLE_EQ(r.threshold, mcp::mismatch_chain_bound(r.n, r.d, r.m, r.tau, r.t, r.epsilon));
  }
}

TEST(Mismatch, RejectsExactClass) {
  EXPECT_THROW(mcp::run_mismatch_scan(small_scan()), mcp::ConfigError);
}

TEST(Mismatch, ChainBoundReducesToPredictedAtZeroEpsilon) {
  EXPECT_DOUBLE_EQ(mcp::mismatch_chain_bound(256, 40, 8, 0.04, 1.0, 0.0),
                   mcp::predicted_error_bound(256, 40, 8, 0.04, 1.0));
}

TEST(Config, Validation) {
  auto bad = small_scan();
  bad.d_grid = {0};
  EXPECT_THROW(bad.validate(), mcp::ConfigError);
  bad = small_scan();
  bad.trials = 0;
  EXPECT_THROW(bad.validate(), mcp::ConfigError);
  bad = small_scan();
  bad.tau = 1.0;
  EXPECT_THROW(bad.validate(), mcp::ConfigError);
  bad = small_scan();
  bad.signal_class = mcp::SparseClass{33};
  EXPECT_THROW(bad.validate(), mcp::ConfigError);
  bad = small_scan();
  bad.m.reset();
  bad.alpha = 0.5;
  EXPECT_EQ(bad.resolved_m(256), 4);
  EXPECT_NO_THROW(bad.validate());
  bad.d_grid.clear();
  EXPECT_THROW(mcp::run_phase_scan(bad), mcp::ConfigError);
}

TEST(Config, JsonEcho) {
  const auto j = mcp::to_json(small_scan());
  EXPECT_EQ(j["n"], 32);
  EXPECT_EQ(j["m"], 4);
  EXPECT_EQ(j["trials"], 6);
  EXPECT_FALSE(j.contains("alpha"));
}

TEST(Corollary, ReportConsistent) {
  const auto rep = mcp::run_corollary_check(64, 1.0, mcp::SparseClass{2}, 3, 9);
  EXPECT_EQ(rep.m, 6);
  EXPECT_DOUBLE_EQ(rep.kappa, mcp::sparse_dl_bound(2, 64, 6) / 6);
  EXPECT_EQ(rep.d, static_cast<std::size_t>(std::ceil(2 * rep.kappa * 6 - 1e-9)));
  EXPECT_DOUBLE_EQ(rep.error_bound, mcp::corollary_error_bound(64, 1.0, rep.kappa).error_bound);
  ASSERT_EQ(rep.records.size(), 3U);
  std::size_t failures = 0;
  for (const auto& r : rep.records) {
    EXPECT_EQ(r.threshold, rep.error_bound);
    failures += !r.success;
  }
  EXPECT_EQ(failures, rep.failures);
}

TEST(Lemmas, SmallGridReport) {
  mcp::LemmaGrid grid;
  grid.chi_d = {10};
  grid.chi_tau = {0.5};
  grid.chi_trials = 2000;
  grid.sigma_cells = {{10, 10, 0.5}};
  grid.sigma_trials = 500;
  const auto a = mcp::run_lemma_suite(grid, 3, 1);
  const auto b = mcp::run_lemma_suite(grid, 3, 2);
  ASSERT_EQ(a.rows.size(), 2U);
  EXPECT_EQ(a.rows[0].kind, "chi_square");
  EXPECT_EQ(a.rows[1].kind, "sigma_max");
  EXPECT_TRUE(a.all_pass);
  std::ostringstream ca, cb;
  mcp::write_lemma_csv(ca, a);
  mcp::write_lemma_csv(cb, b);
  EXPECT_EQ(ca.str(), cb.str());
}

TEST(GitHash, KnownBlob) {
  EXPECT_EQ(mcp::git_blob_sha1(std::string("hello\n")), "ce013625030ba8dba906f756967f9e9ca394464a");
  EXPECT_EQ(mcp::git_blob_sha1(std::string()), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
}

TEST(Manifest, HashesOutputs) {
  const auto path = std::filesystem::temp_directory_path() / "mcp_manifest_test.txt";
  {
    std::ofstream f(path, std::ios::binary);
    f << "hello\n";
  }
  const auto m = mcp::make_manifest("scan", mcp::to_json(small_scan()), {path.string()}, 1.5);
  EXPECT_EQ(m["command"], "scan");
  ASSERT_EQ(m["outputs"].size(), 1U);
  EXPECT_EQ(m["outputs"][0]["bytes"], 6);
  EXPECT_EQ(m["outputs"][0]["git_blob_sha1"], "ce013625030ba8dba906f756967f9e9ca394464a");
  EXPECT_EQ(m["config"]["n"], 32);
  std::filesystem::remove(path);
}

}  // namespace
