#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sqsample/deform.hpp"
#include "sqsample/metrics.hpp"
#include "sqsample/pipeline.hpp"

namespace sq {
namespace {

SamplingConfig with_spacing(double d) {
  SamplingConfig c;
  c.spacing = d;
  return c;
}

void expect_near(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_LE((a - b).norm(), tol) << a.transpose() << " vs " << b.transpose();
}

TEST(Taper, Examples) {
  const double a3 = 1.7;
  expect_near(taper({1, 1, a3}, 1.0, 0.0, a3), {2, 1, a3}, 1e-15);
  expect_near(taper({1, 0, a3}, -1.0, 0.0, a3), {0, 0, a3}, 1e-15);
  const std::vector<Vec3> pts{{0.3, -0.2, 0.9}, {1, 2, 3}};
  const auto same = taper_points(pts, 0.0, 0.0, a3);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(same[i], pts[i]);
}

TEST(Bend, Examples) {
  const double k = 2.5;
  expect_near(bend({0.4, -0.3, 0.0}, k), {0.4, -0.3, 0.0}, 0.0);
  expect_near(bend({0, 0, k}, k), {k * (1 - std::sqrt(2.0)), 0, k}, 1e-15);
}

TEST(Bend, HugeRadiusIsNearlyIdentity) {
  const double a3 = 1.3;
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 p{u(rng), u(rng), a3 * u(rng)};
    EXPECT_LT((bend(p, 1e6 * a3) - p).norm(), 1e-6 * a3);
  }
}

TEST(Pose, Examples) {
  expect_near(rotation_zyz({}) * Vec3(1, 2, 3), {1, 2, 3}, 0.0);
  expect_near(pose_points(std::vector<Vec3>{{1, 0, 0}}, {kHalfPi, 0, 0}, Vec3::Zero())[0], {0, 1, 0},
              1e-15);
  // Rz(theta) Ry(phi) Rz(psi): psi acts first.
  const Mat3 r = rotation_zyz({0.0, kHalfPi, kHalfPi});
  expect_near(r * Vec3(1, 0, 0), {0, 1, 0}, 1e-15);
  EXPECT_NEAR((r * r.transpose() - Mat3::Identity()).norm(), 0.0, 1e-15);
  EXPECT_NEAR(r.determinant(), 1.0, 1e-15);
  expect_near(pose_points(std::vector<Vec3>{{0, 0, 0}}, {}, {1, -2, 3})[0], {1, -2, 3}, 0.0);
}

TEST(Pipeline, IdentityLeavesSurfaceUnchanged) {
  const auto s = generate(validate({}), with_spacing(0.2));
  const auto canonical = sample_surface(validate({}), with_spacing(0.2));
  ASSERT_EQ(s.size(), canonical.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.points[i], canonical.points[i]);
  EXPECT_EQ(s.frame, Frame::Deformed);
}

TEST(Pipeline, TaperAndBendDoNotCommute) {
  const double a3 = 1.0, kx = 0.5, k = a3;
  const Vec3 p{0.6, 0.2, 0.8};
  const Vec3 taper_then_bend = bend(taper(p, kx, 0.0, a3), k);
  const Vec3 bend_then_taper = taper(bend(p, k), kx, 0.0, a3);
  EXPECT_GT((taper_then_bend - bend_then_taper).norm(), 1e-3);
}

TEST(Pipeline, FixedOrder) {
  SuperquadricParams p;
  p.scale = {1.0, 1.2, 0.9};
  p.taper = {0.4, -0.3};
  p.bend_radius = 2.0;
  p.euler = {0.3, 1.1, -0.6};
  p.position = {1, 2, 3};
  auto canonical = sample_surface(validate(p), with_spacing(0.15));
  const auto out = apply_pipeline(canonical);
  const Mat3 r = rotation_zyz(p.euler);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Vec3& x = canonical.points[i];
    const double fx = 0.4 * x.z() / 0.9 + 1, fy = -0.3 * x.z() / 0.9 + 1;
    const Vec3 t{fx * x.x(), fy * x.y(), x.z()};
    const Vec3 b{t.x() + 2.0 - std::sqrt(4.0 + t.z() * t.z()), t.y(), t.z()};
    expect_near(out.points[i], r * b + p.position, 1e-12);
  }
  EXPECT_THROW(apply_pipeline(out), Error);
}

TEST(Pipeline, InverseRecoversCanonicalPoints) {
  SuperquadricParams p;
  p.scale = {0.8, 1.5, 1.1};
  p.shape = {0.6, 1.4};
  p.taper = {0.3, -0.5};
  p.bend_radius = 3.0;
  p.euler = {-0.7, 0.4, 2.0};
  p.position = {-1, 0.5, 4};
  const auto canonical = sample_surface(validate(p), with_spacing(0.1));
  const auto deformed = apply_pipeline(canonical);
  const auto back = canonical_points(deformed.points, p);
  for (std::size_t i = 0; i < back.size(); ++i) expect_near(back[i], canonical.points[i], 1e-10);
}

TEST(Pipeline, TaperedSphereResidual) {
  SuperquadricParams p;
  p.taper.kx = 0.5;
  const auto s = generate(validate(p), with_spacing(0.05));
  EXPECT_LT(surface_residual(s), 1e-6);
}

TEST(Pipeline, ResidualSurvivesEmptyRoundTrip) {
  const auto canonical = sample_surface(validate({}), with_spacing(0.1));
  const double before = surface_residual(canonical);
  EXPECT_EQ(surface_residual(apply_pipeline(canonical)), before);
}

TEST(Pipeline, PinchedTaperHasNoPreimage) {
  SuperquadricParams p;
  p.taper.kx = -1.0;
  const auto back = canonical_points(std::vector<Vec3>{{0, 0, 1}}, p);
  EXPECT_FALSE(std::isfinite(back[0].x()));
}

}  // namespace
}  // namespace sq
