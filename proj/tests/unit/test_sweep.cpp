#include <gtest/gtest.h>

#include "gpa/sweep.hpp"

using namespace gpa;

TEST(Sweep, RowsFollowGrid) {
  SweepConfig cfg;
  cfg.values = {0.2, 0.4, 0.9};
  cfg.n = 5000;
  cfg.replicates = 3;
  const auto rows = run_sweep(cfg);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows[0].feasible);
  EXPECT_EQ(rows[0].replicates, 3u);
  EXPECT_GT(rows[0].C2.mean, 0.0);
  EXPECT_GT(rows[0].C2.sd, 0.0);
  EXPECT_NEAR(rows[1].theory_C2, avg_clustering_series(resolve_params(2, 0.4, 0.3)).value, 1e-15);
  // A = 0.9 >= 1 - D/m: kept as a row with a note.
  EXPECT_FALSE(rows[2].feasible);
  EXPECT_NE(rows[2].note.find("feasible"), std::string::npos);
  EXPECT_EQ(rows[2].replicates, 0u);
}

TEST(Sweep, SingleReplicateIsNoted) {
  SweepConfig cfg;
  cfg.param = SweepParam::D;
  cfg.values = {0.0, 0.4};
  cfg.n = 2000;
  cfg.replicates = 1;
  const auto rows = run_sweep(cfg);
  EXPECT_FALSE(rows[0].note.empty());
  EXPECT_EQ(rows[0].C2.sd, 0.0);
  EXPECT_EQ(rows[0].theory_C2, 0.0);
}

TEST(Sweep, IndependentOfThreadCount) {
  SweepConfig cfg;
  cfg.values = {0.2, 0.5};
  cfg.n = 3000;
  cfg.replicates = 4;
  const auto a = run_sweep(cfg);
  cfg.threads = 3;
  const auto b = run_sweep(cfg);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].C2.mean, b[i].C2.mean);
    EXPECT_EQ(a[i].C1.sd, b[i].C1.sd);
  }
}

TEST(Sweep, RejectsEmptyGrid) {
  SweepConfig cfg;
  EXPECT_THROW(run_sweep(cfg), InvalidInput);
  cfg.values = {0.5};
  cfg.replicates = 0;
  EXPECT_THROW(run_sweep(cfg), InvalidInput);
}

TEST(Profile, PoolsAcrossSeeds) {
  const auto p = resolve_params(2, 0.5, 0.3);
  const auto prof = clustering_profile(p, 20000, 3, 5, 10, 2);
  ASSERT_EQ(prof.rows.size(), 9u);
  EXPECT_EQ(prof.rows.front().d, 2u);
  EXPECT_NEAR(prof.rows.front().C_theory, 0.3, 1e-15);
  EXPECT_NEAR(prof.N_fraction[2], 0.5, 0.02);
  EXPECT_NEAR(prof.rows.front().C_of_d, 0.3, 0.03);
}
