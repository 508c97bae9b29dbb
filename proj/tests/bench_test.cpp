#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sqsample/bench.hpp"

namespace sq {
namespace {

TEST(BenchGrid, DeskDefaults) {
  const auto g = default_bench_grid(ShapeKind::Superellipsoid);
  EXPECT_EQ(g.eps_values, (std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5, 1.7, 1.9}));
  EXPECT_EQ(g.spacings, (std::vector<double>{0.01, 0.02, 0.05, 0.1, 0.2}));
  EXPECT_EQ(g.repetitions, 31u);
}

TEST(BenchGrid, FullScale) {
  const auto g = full_scale_grid(ShapeKind::Superparaboloid);
  EXPECT_EQ(g.kind, ShapeKind::Superparaboloid);
  ASSERT_EQ(g.eps_values.size(), 39u);
  ASSERT_EQ(g.spacings.size(), 196u);
  EXPECT_EQ(g.repetitions, 1000u);
  EXPECT_NEAR(g.eps_values.front(), 0.1, 1e-12);
  EXPECT_NEAR(g.eps_values.back(), 2.0, 1e-12);
  EXPECT_NEAR(g.spacings.front(), 0.005, 1e-12);
  EXPECT_NEAR(g.spacings.back(), 0.2, 1e-12);
}

TEST(RunBench, RecordsAreEpsMajor) {
  BenchGrid g;
  g.eps_values = {0.5, 1.5};
  g.spacings = {0.2, 0.1, 0.05};
  g.repetitions = 3;
  std::vector<BenchRecord> seen;
  const auto records = run_bench(g, [&](const BenchRecord& r) { seen.push_back(r); });
  ASSERT_EQ(records.size(), 6u);
  EXPECT_EQ(seen.size(), 6u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& r = records[i * 3 + j];
      EXPECT_EQ(r.eps1, g.eps_values[i]);
      EXPECT_EQ(r.eps2, g.eps_values[i]);
      EXPECT_EQ(r.spacing, g.spacings[j]);
      EXPECT_EQ(r.reps, 3u);
      EXPECT_FALSE(r.error);
      EXPECT_GE(r.median_ms, 0.0);
      if (j > 0) {
        EXPECT_GT(r.points, records[i * 3 + j - 1].points);
      }
    }
  }
}

TEST(RunBench, FailingCellDoesNotStopTheGrid) {
  BenchGrid g;
  g.eps_values = {1.0, 2.5};
  g.spacings = {0.2};
  g.repetitions = 1;
  const auto records = run_bench(g);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_FALSE(records[0].error);
  EXPECT_GT(records[0].points, 0u);
  ASSERT_TRUE(records[1].error);
  EXPECT_NE(records[1].error->find("EpsOutOfRange"), std::string::npos);
  EXPECT_EQ(records[1].points, 0u);
  EXPECT_TRUE(std::isnan(records[1].median_ms));
  EXPECT_EQ(records[1].reps, 0u);
}

TEST(BenchCsv, Format) {
  std::vector<BenchRecord> rows(2);
  rows[0] = {ShapeKind::Superellipsoid, 0.5, 0.5, 0.05, 1234, 1.5, 31, {}};
  rows[1] = {ShapeKind::Superparaboloid, 1.9, 1.9, 0.2, 0, std::nan(""), 0, "boom"};
  std::ostringstream os;
  write_bench_csv(os, rows);
  EXPECT_EQ(os.str(),
            "kind,eps1,eps2,D,points,median_ms,reps\n"
            "se,0.5,0.5,0.05,1234,1.500000,31\n"
            "sp,1.9,1.9,0.2,0,nan,0\n");
}

}  // namespace
}  // namespace sq
