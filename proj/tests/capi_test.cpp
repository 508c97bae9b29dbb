// Exercises the shared library only through its C header.
#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "sqsample/sqsample.h"

namespace {

sq_config config(double spacing) {
  sq_config c;
  sq_config_default(&c, spacing);
  return c;
}

TEST(CApi, Strings) {
  EXPECT_STREQ(sq_status_string(SQ_OK), "ok");
  EXPECT_STREQ(sq_issue_name(SQ_ISSUE_EPS_OUT_OF_RANGE), "EpsOutOfRange");
  EXPECT_STREQ(sq_version(), "1.0.0");
}

TEST(CApi, ValidateReportsMask) {
  sq_params p;
  sq_params_default(&p);
  unsigned issues = 123;
  EXPECT_EQ(sq_validate(&p, &issues), SQ_OK);
  EXPECT_EQ(issues, 0u);

  p.eps1 = 2.5;
  p.a1 = 20;
  EXPECT_EQ(sq_validate(&p, &issues), SQ_ERR_VALIDATION);
  EXPECT_EQ(issues, unsigned(SQ_ISSUE_EPS_OUT_OF_RANGE | SQ_ISSUE_SCALE_RATIO_TOO_LARGE));
  EXPECT_NE(std::string(sq_last_error()).find("EpsOutOfRange"), std::string::npos);

  sq_params_default(&p);
  p.bend_enabled = 1;
  p.bend_k = 0.5;
  EXPECT_EQ(sq_validate(&p, &issues), SQ_ERR_VALIDATION);
  EXPECT_EQ(issues, unsigned(SQ_ISSUE_BEND_RADIUS_TOO_SMALL));
  p.bend_enabled = 0;
  EXPECT_EQ(sq_validate(&p, &issues), SQ_OK);
}

TEST(CApi, NullAndBadArguments) {
  sq_params p;
  sq_params_default(&p);
  const sq_config c = config(0.1);
  sq_cloud* cloud = nullptr;
  unsigned issues;
  EXPECT_EQ(sq_validate(nullptr, &issues), SQ_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sq_generate(&p, &c, nullptr), SQ_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sq_generate(nullptr, &c, &cloud), SQ_ERR_INVALID_ARGUMENT);
  p.kind = static_cast<sq_kind>(7);
  EXPECT_EQ(sq_generate(&p, &c, &cloud), SQ_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(cloud, nullptr);
  EXPECT_EQ(sq_cloud_read(nullptr, &cloud), SQ_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sq_bench_run(nullptr, nullptr), SQ_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sq_cloud_size(nullptr), 0u);
  sq_cloud_free(nullptr);
  sq_bench_free(nullptr);
}

TEST(CApi, ErrorMapping) {
  sq_params p;
  sq_params_default(&p);
  sq_cloud* cloud = nullptr;
  sq_config c = config(-1);
  EXPECT_EQ(sq_generate(&p, &c, &cloud), SQ_ERR_INVALID_CONFIG);
  c = config(0.001);
  c.max_samples_per_curve = 20;
  EXPECT_EQ(sq_generate(&p, &c, &cloud), SQ_ERR_SAMPLE_CAP);
  EXPECT_EQ(sq_generate_naive(&p, 1, 5, &cloud), SQ_ERR_INVALID_CONFIG);
  p.eps2 = 3;
  c = config(0.1);
  EXPECT_EQ(sq_generate(&p, &c, &cloud), SQ_ERR_VALIDATION);
  EXPECT_EQ(sq_cloud_read("/nonexistent/cloud.ply", &cloud), SQ_ERR_IO);
  EXPECT_EQ(cloud, nullptr);
  EXPECT_GT(std::string(sq_last_error()).size(), 0u);
}

TEST(CApi, GenerateCopyAndMetrics) {
  sq_params p;
  sq_params_default(&p);
  const sq_config c = config(0.1);
  sq_cloud* cloud = nullptr;
  ASSERT_EQ(sq_generate(&p, &c, &cloud), SQ_OK);
  const size_t n = sq_cloud_size(cloud);
  ASSERT_GT(n, 100u);
  EXPECT_TRUE(sq_cloud_has_normals(cloud));

  std::vector<double> xyz(3 * n), nrm(3 * n);
  ASSERT_EQ(sq_cloud_copy_points(cloud, xyz.data(), n), SQ_OK);
  ASSERT_EQ(sq_cloud_copy_normals(cloud, nrm.data(), n), SQ_OK);
  for (size_t i = 0; i < n; ++i) {
    const double r = std::hypot(xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]);
    EXPECT_NEAR(r, 1.0, 1e-9);
    EXPECT_NEAR(nrm[3 * i] * xyz[3 * i] + nrm[3 * i + 1] * xyz[3 * i + 1] + nrm[3 * i + 2] * xyz[3 * i + 2], 1.0,
                1e-9);
  }
  EXPECT_EQ(sq_cloud_copy_points(cloud, nullptr, 1), SQ_ERR_INVALID_ARGUMENT);

  sq_metrics m;
  ASSERT_EQ(sq_cloud_metrics(cloud, &p, &m), SQ_OK);
  EXPECT_TRUE(m.has_residual);
  EXPECT_LT(m.implicit_residual_max, 1e-9);
  EXPECT_EQ(m.point_count, n);
  EXPECT_GT(m.nn_mean, 0.0);
  ASSERT_EQ(sq_cloud_metrics(cloud, nullptr, &m), SQ_OK);
  EXPECT_FALSE(m.has_residual);

  double directed = -1, symmetric = -1;
  ASSERT_EQ(sq_cloud_distance(cloud, cloud, &directed, &symmetric), SQ_OK);
  EXPECT_EQ(directed, 0.0);
  EXPECT_EQ(symmetric, 0.0);
  sq_cloud_free(cloud);
}

TEST(CApi, WriteReadRoundTrip) {
  sq_params p;
  sq_params_default(&p);
  p.kind = SQ_SUPERPARABOLOID;
  p.taper[0] = 0.3;
  const sq_config c = config(0.1);
  sq_cloud* cloud = nullptr;
  ASSERT_EQ(sq_generate(&p, &c, &cloud), SQ_OK);

  const auto path = std::filesystem::temp_directory_path() / "sqsample_capi_roundtrip.csv";
  ASSERT_EQ(sq_cloud_write(cloud, SQ_FORMAT_CSV, path.c_str()), SQ_OK);
  EXPECT_EQ(sq_cloud_write(cloud, static_cast<sq_format>(9), path.c_str()), SQ_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sq_cloud_write(cloud, SQ_FORMAT_PLY, "/nonexistent/x.ply"), SQ_ERR_IO);

  sq_cloud* back = nullptr;
  ASSERT_EQ(sq_cloud_read(path.c_str(), &back), SQ_OK);
  EXPECT_EQ(sq_cloud_size(back), sq_cloud_size(cloud));
  double directed = -1, symmetric = -1;
  ASSERT_EQ(sq_cloud_distance(cloud, back, &directed, &symmetric), SQ_OK);
  EXPECT_EQ(directed, 0.0);

  sq_metrics m;
  ASSERT_EQ(sq_cloud_metrics(back, &p, &m), SQ_OK);
  EXPECT_LT(m.implicit_residual_max, 1e-6);
  sq_cloud_free(back);
  sq_cloud_free(cloud);
  std::filesystem::remove(path);
}

TEST(CApi, TooFewPoints) {
  const auto path = std::filesystem::temp_directory_path() / "sqsample_capi_one.csv";
  std::FILE* f = std::fopen(path.c_str(), "w");
  std::fputs("x,y,z\n1,2,3\n", f);
  std::fclose(f);
  sq_cloud* cloud = nullptr;
  ASSERT_EQ(sq_cloud_read(path.c_str(), &cloud), SQ_OK);
  sq_metrics m;
  EXPECT_EQ(sq_cloud_metrics(cloud, nullptr, &m), SQ_ERR_TOO_FEW_POINTS);
  sq_cloud_free(cloud);
  std::filesystem::remove(path);
}

TEST(CApi, NaiveGrid) {
  sq_params p;
  sq_params_default(&p);
  sq_cloud* cloud = nullptr;
  ASSERT_EQ(sq_generate_naive(&p, 10, 10, &cloud), SQ_OK);
  EXPECT_GT(sq_cloud_size(cloud), 100u);
  sq_cloud_free(cloud);
}

void count_rows(const sq_bench_row*, void* user) { ++*static_cast<int*>(user); }

TEST(CApi, Bench) {
  const double eps[] = {0.5, 2.5};
  const double d[] = {0.2, 0.1};
  int calls = 0;
  sq_bench_grid g{SQ_SUPERELLIPSOID, eps, 2, d, 2, 2, count_rows, &calls};
  sq_bench* bench = nullptr;
  ASSERT_EQ(sq_bench_run(&g, &bench), SQ_OK);
  ASSERT_EQ(sq_bench_size(bench), 4u);
  EXPECT_EQ(calls, 4);
  sq_bench_row row;
  ASSERT_EQ(sq_bench_row_at(bench, 1, &row), SQ_OK);
  EXPECT_EQ(row.eps1, 0.5);
  EXPECT_EQ(row.spacing, 0.1);
  EXPECT_FALSE(row.failed);
  EXPECT_EQ(row.reps, 2u);
  ASSERT_EQ(sq_bench_row_at(bench, 2, &row), SQ_OK);
  EXPECT_TRUE(row.failed);
  EXPECT_EQ(sq_bench_row_at(bench, 4, &row), SQ_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sq_bench_write_csv(bench, "/nonexistent/b.csv"), SQ_ERR_IO);
  sq_bench_free(bench);

  g.eps_values = nullptr;
  EXPECT_EQ(sq_bench_run(&g, &bench), SQ_ERR_INVALID_ARGUMENT);
}

}  // namespace
