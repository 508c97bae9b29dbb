#pragma once

#include "sqsample/deform.hpp"
#include "sqsample/math.hpp"
#include "sqsample/params.hpp"
#include "sqsample/surface.hpp"

namespace sq {

/// Matrix that maps a surface normal through a deformation (up to scale).
struct NormalTransform {
  Mat3 matrix = Mat3::Identity();

  Vec3 apply(const Vec3& n) const { return matrix * n; }
};

/// Below this magnitude a taper factor is replaced by +/- this value.
inline constexpr double kTaperClamp = 1e-8;

/// Outward unit normal of a superellipsoid at signed (eta, omega), from the
/// division-free form
///   ((1/a1) cos^(2-e1) eta cos^(2-e2) w, (1/a2) cos^(2-e1) eta sin^(2-e2) w,
///    (1/a3) sin^(2-e1) eta)
/// with signed powers.
Vec3 se_normal(double eta, double omega, const SuperquadricParams& params);

/// Unit normal of a superparaboloid at (u, omega), parallel to the dual surface
///   ((1/a1) u cos^(2-e2) w, (1/a2) u sin^(2-e2) w, -(1/a3)(e1/2) u^(2-2/e1))
/// and pointing to -z at the apex. The apex u = 0 returns (0, 0, -1).
Vec3 sp_normal(double u, double omega, const SuperquadricParams& params);

/// Taper normal transform at the pre-taper point, without the determinant:
///   [[1/fx, 0, 0], [0, 1/fy, 0], [-fx' x / fx, -fy' y / fy, 1]].
/// Taper factors smaller than kTaperClamp in magnitude are clamped.
NormalTransform taper_normal_transform(const Vec3& p, double kx, double ky, double a3);

/// [[1, 0, 0], [0, 1, 0], [z / sqrt(k^2 + z^2), 0, 1]].
NormalTransform bend_normal_transform(double z, double k);

/// Fills surface.normals with canonical-frame normals from param_coords.
void attach_normals(SampledSurface& surface);

/// Pushes canonical normals through taper (at each point's pre-taper
/// coordinates), bend (at the tapered z), and the pose rotation, then
/// renormalizes. The surface points must still be canonical.
void transform_normals(SampledSurface& surface, const DeformationSpec& spec, const Pose& pose);

}  // namespace sq
