#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "sqsample/params.hpp"

namespace sq {
namespace {

SuperquadricParams sphere() { return {}; }

std::vector<ErrorCode> codes(const SuperquadricParams& p) {
  std::vector<ErrorCode> out;
  for (const auto& issue : find_issues(p)) out.push_back(issue.code);
  return out;
}

TEST(Validate, UnitSphereIsValid) {
  EXPECT_TRUE(find_issues(sphere()).empty());
  EXPECT_NO_THROW(validate(sphere()));
}

TEST(Validate, RejectsEachInvariant) {
  auto p = sphere();
  p.shape.eps1 = 2.5;
  EXPECT_EQ(codes(p), std::vector{ErrorCode::EpsOutOfRange});

  p = sphere();
  p.scale.a1 = 20.0;
  EXPECT_EQ(codes(p), std::vector{ErrorCode::ScaleRatioTooLarge});

  p = sphere();
  p.bend_radius = 0.5 * p.scale.a3;
  EXPECT_EQ(codes(p), std::vector{ErrorCode::BendRadiusTooSmall});

  p = sphere();
  p.scale.a2 = 0.0;
  EXPECT_EQ(codes(p).front(), ErrorCode::NonPositiveScale);

  p = sphere();
  p.taper.ky = -1.5;
  EXPECT_EQ(codes(p), std::vector{ErrorCode::TaperOutOfRange});

  p = sphere();
  p.position.x() = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(codes(p), std::vector{ErrorCode::NonFiniteParameter});
}

TEST(Validate, EnvelopeEdges) {
  auto p = sphere();
  p.shape = {kMinEps, kMaxEps};
  EXPECT_TRUE(find_issues(p).empty());
  p.shape.eps1 = 0.0;
  EXPECT_EQ(codes(p), std::vector{ErrorCode::EpsOutOfRange});
  p = sphere();
  p.scale = {10.0, 1.0, 1.0};
  EXPECT_TRUE(find_issues(p).empty());
  p.taper = {1.0, -1.0};
  p.bend_radius = p.scale.a3;
  EXPECT_TRUE(find_issues(p).empty());
}

TEST(Validate, ReportsEveryViolation) {
  auto p = sphere();
  p.shape.eps1 = 2.5;
  p.scale.a1 = 20.0;
  p.taper.kx = 3.0;
  try {
    validate(p);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.issues().size(), 3u);
    const std::string what = e.what();
    EXPECT_NE(what.find("EpsOutOfRange"), std::string::npos);
    EXPECT_NE(what.find("ScaleRatioTooLarge"), std::string::npos);
    EXPECT_NE(what.find("TaperOutOfRange"), std::string::npos);
  }
}

TEST(Validate, IdempotentAndUnchanged) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto p = oracle::random_params(rng, i % 2 ? ShapeKind::Superparaboloid : ShapeKind::Superellipsoid);
    p.euler = {0.1 * i, 0.2, 0.3};
    const auto once = validate(p);
    const auto twice = validate(once.get());
    EXPECT_EQ(twice->scale.a1, p.scale.a1);
    EXPECT_EQ(twice->shape.eps2, p.shape.eps2);
    EXPECT_EQ(twice->euler.theta, p.euler.theta);
  }
}

TEST(InsideOutside, SphereValues) {
  const auto p = sphere();
  EXPECT_DOUBLE_EQ(inside_outside_se({0, 0, 0}, p), 0.0);
  EXPECT_DOUBLE_EQ(inside_outside_se({1, 0, 0}, p), 1.0);
  EXPECT_DOUBLE_EQ(inside_outside_se({2, 0, 0}, p), 4.0);
}

TEST(InsideOutside, SuperparaboloidValues) {
  auto p = sphere();
  p.kind = ShapeKind::Superparaboloid;
  EXPECT_DOUBLE_EQ(inside_outside_sp({1, 0, 0}, p), 1.0);
  EXPECT_DOUBLE_EQ(inside_outside_sp({0, 0, -1}, p), 1.0);
  EXPECT_DOUBLE_EQ(inside_outside_sp({0, 0, 0}, p), 0.0);
  EXPECT_DOUBLE_EQ(inside_outside({0, 0, -1}, p), 1.0);
}

TEST(InsideOutside, ParametricPointsInEveryOctant) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int i = 0; i < 500; ++i) {
    const auto se = oracle::random_params(rng, ShapeKind::Superellipsoid, kMinEps);
    const double eta = 0.5 * angle(rng), omega = angle(rng);
    EXPECT_NEAR(inside_outside_se(oracle::superellipsoid(se, eta, omega), se), 1.0, 1e-9);

    const auto sp = oracle::random_params(rng, ShapeKind::Superparaboloid, kMinEps);
    const double u = std::fabs(angle(rng)) / kPi;
    EXPECT_NEAR(inside_outside_sp(oracle::superparaboloid(sp, u, omega), sp), 1.0, 1e-9);
  }
}

TEST(SamplingConfigCheck, RejectsBadValues) {
  SamplingConfig c;
  EXPECT_NO_THROW(check_config(c));
  for (auto mutate : std::vector<void (*)(SamplingConfig&)>{
           [](SamplingConfig& x) { x.spacing = 0.0; },
           [](SamplingConfig& x) { x.spacing = std::numeric_limits<double>::infinity(); },
           [](SamplingConfig& x) { x.theta_singular = 0.0; },
           [](SamplingConfig& x) { x.theta_singular = kQuarterPi; },
           [](SamplingConfig& x) { x.max_samples_per_curve = 1; }}) {
    SamplingConfig bad;
    mutate(bad);
    try {
      check_config(bad);
      ADD_FAILURE() << "accepted an invalid config";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
    }
  }
}

TEST(ErrorCodes, StableNames) {
  EXPECT_EQ(to_string(ErrorCode::EpsOutOfRange), "EpsOutOfRange");
  EXPECT_EQ(to_string(ErrorCode::TooFewPoints), "TooFewPoints");
  EXPECT_EQ(to_string(ErrorCode::SampleCapExceeded), "SampleCapExceeded");
}

}  // namespace
}  // namespace sq
