#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sqsample/math.hpp"
#include "sqsample/params.hpp"
#include "sqsample/surface.hpp"

namespace sq {

/// Taper and bend settings. An empty bend_radius skips the bend stage.
struct DeformationSpec {
  double kx = 0.0;
  double ky = 0.0;
  std::optional<double> bend_radius;
  double a3 = 1.0;

  bool has_taper() const noexcept { return kx != 0.0 || ky != 0.0; }
};

struct Pose {
  EulerZYZ euler;
  Vec3 position = Vec3::Zero();
};

DeformationSpec deformation_of(const SuperquadricParams& params);
Pose pose_of(const SuperquadricParams& params);

/// f(z) = K z / a3 + 1
inline double taper_factor(double k, double z, double a3) { return k / a3 * z + 1.0; }

/// X = f_x(z) x, Y = f_y(z) y, Z = z.
Vec3 taper(const Vec3& p, double kx, double ky, double a3);
/// X = x + (k - sqrt(k^2 + z^2)), Y = y, Z = z.
Vec3 bend(const Vec3& p, double k);
/// Rz(theta) * Ry(phi) * Rz(psi).
Mat3 rotation_zyz(const EulerZYZ& euler);

std::vector<Vec3> taper_points(std::span<const Vec3> points, double kx, double ky, double a3);
std::vector<Vec3> bend_points(std::span<const Vec3> points, double k);
/// p' = R p + t.
std::vector<Vec3> pose_points(std::span<const Vec3> points, const EulerZYZ& euler,
                              const Vec3& position);

/// Trans(Rot(Bend(Taper(x)))) for a single canonical-frame point.
Vec3 deform_point(const Vec3& p, const DeformationSpec& spec, const Pose& pose);

/// Applies taper, bend, rotation and translation in that order. Normals, when
/// present, are carried along through transform_normals(). The input must be in
/// the canonical frame; point count and order are preserved.
SampledSurface apply_pipeline(const SampledSurface& surface);

/// Inverse of the pipeline: translation, rotation, bend, then taper are undone.
/// Points where a taper factor vanishes have no preimage and come back non-finite.
std::vector<Vec3> canonical_points(std::span<const Vec3> points, const SuperquadricParams& params);

}  // namespace sq
