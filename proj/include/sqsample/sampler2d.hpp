#pragma once

#include <vector>

#include "sqsample/math.hpp"
#include "sqsample/params.hpp"

namespace sq {

/// First-quadrant superellipse x(t) = (a cos^eps t, b sin^eps t), t in [0, pi/2].
struct Superellipse {
  double a = 1.0;
  double b = 1.0;
  double eps = 1.0;

  Vec2 point(double theta) const;
};

/// Superparabola x(u) = (u, a3 (u^(2/eps1) - 1)), u in [0, 1].
struct Superparabola {
  double a3 = 1.0;
  double eps1 = 1.0;

  Vec2 point(double u) const;
};

/// Strictly increasing angles from 0 to pi/2 inclusive.
struct AngleSequence {
  std::vector<double> values;
  bool closed_endpoints = true;
};

/// Strictly increasing parameters from 0 to 1 inclusive.
struct ParamSequence {
  std::vector<double> values;
};

/// Lower bound on every step so the sampling loops always make progress.
inline constexpr double kMinStep = 1e-9;

/// Angular step that advances the curve by roughly `spacing`.
///
/// Returns the magnitude of a step away from the nearer singular endpoint.
/// Within theta_singular of 0 the step is (theta^eps + D/b)^(1/eps) - theta,
/// within theta_singular of pi/2 the mirrored form with a is used, and in
/// between the first-order chord solution
///
///   (D/eps) * sqrt(cos^2 sin^2 / (a^2 cos^(2 eps) sin^4 + b^2 sin^(2 eps) cos^4)).
///
/// The result is floored at kMinStep. Throws Error(NonFiniteResult) when the
/// step overflows.
double delta_theta(double theta, const Superellipse& curve, double spacing,
                   double theta_singular = 0.01);

/// Samples [0, pi/2] with an ascending pass from 0 and a descending pass from
/// pi/2 that meet near pi/4. Away from the singular ends each step is
/// delta_theta evaluated at the midpoint of a provisional delta_theta step. Throws Error(SampleCapExceeded) when the two
/// passes together exceed config.max_samples_per_curve.
AngleSequence sample_superellipse_angles(const Superellipse& curve, const SamplingConfig& config);

/// D / sqrt(4 a3^2 / eps1^2 * u^(4/eps1 - 2) + 1), floored at kMinStep.
double delta_u(double u, double a3, double eps1, double spacing);

/// Ascending pass over [0, 1] with midpoint-corrected delta_u steps; the last
/// sample is exactly 1.
ParamSequence sample_superparabola_params(double a3, double eps1, const SamplingConfig& config);

}  // namespace sq
