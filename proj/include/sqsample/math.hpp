#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace sq {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;
inline constexpr double kQuarterPi = std::numbers::pi / 4.0;

/// sgn(base) * |base|^exponent. Zero maps to zero for every exponent.
inline double signed_pow(double base, double exponent) {
  if (base == 0.0) return 0.0;
  const double magnitude = std::pow(std::fabs(base), exponent);
  return base < 0.0 ? -magnitude : magnitude;
}

struct CosSin {
  double cos;
  double sin;
};

/// cos/sin of an angle in [0, pi/2]. Both endpoints give exact zeros, which
/// matters once the result is raised to a small fractional power
/// (cos(pi/2) ~ 6e-17 would become ~0.02 under ^0.1).
inline CosSin quarter_cos_sin(double theta) {
  if (theta > kQuarterPi) {
    // Exact subtraction on [pi/4, pi/2] (Sterbenz).
    const double complement = kHalfPi - theta;
    return {std::sin(complement), std::cos(complement)};
  }
  return {std::cos(theta), std::sin(theta)};
}

/// cos/sin of any angle, reduced to the first quadrant so that multiples
/// of pi/2 produced by exact mirroring (pi - w, -w, w - pi) keep exact zeros.
inline CosSin cos_sin(double angle) {
  double reduced = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  double cos_sign = 1.0;
  double sin_sign = 1.0;
  if (reduced < 0.0) {
    reduced = -reduced;
    sin_sign = -1.0;
  }
  if (reduced > kHalfPi) {
    reduced = kPi - reduced;
    cos_sign = -1.0;
  }
  const CosSin q = quarter_cos_sin(reduced);
  return {cos_sign * q.cos, sin_sign * q.sin};
}

}  // namespace sq
