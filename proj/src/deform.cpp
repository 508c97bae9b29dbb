#include "sqsample/deform.hpp"

#include <cmath>

#include "sqsample/normals.hpp"

namespace sq {

DeformationSpec deformation_of(const SuperquadricParams& params) {
  return {params.taper.kx, params.taper.ky, params.bend_radius, params.scale.a3};
}

Pose pose_of(const SuperquadricParams& params) { return {params.euler, params.position}; }

Vec3 taper(const Vec3& p, double kx, double ky, double a3) {
  return {taper_factor(kx, p.z(), a3) * p.x(), taper_factor(ky, p.z(), a3) * p.y(), p.z()};
}

Vec3 bend(const Vec3& p, double k) {
  return {p.x() + (k - std::sqrt(k * k + p.z() * p.z())), p.y(), p.z()};
}

Mat3 rotation_zyz(const EulerZYZ& euler) {
  auto rz = [](double a) {
    const double c = std::cos(a), s = std::sin(a);
    Mat3 m;
    m << c, -s, 0, s, c, 0, 0, 0, 1;
    return m;
  };
  const double c = std::cos(euler.phi), s = std::sin(euler.phi);
  Mat3 ry;
  ry << c, 0, s, 0, 1, 0, -s, 0, c;
  return rz(euler.theta) * ry * rz(euler.psi);
}

std::vector<Vec3> taper_points(std::span<const Vec3> points, double kx, double ky, double a3) {
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(taper(p, kx, ky, a3));
  return out;
}

std::vector<Vec3> bend_points(std::span<const Vec3> points, double k) {
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(bend(p, k));
  return out;
}

std::vector<Vec3> pose_points(std::span<const Vec3> points, const EulerZYZ& euler,
                              const Vec3& position) {
  const Mat3 r = rotation_zyz(euler);
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(r * p + position);
  return out;
}

Vec3 deform_point(const Vec3& p, const DeformationSpec& spec, const Pose& pose) {
  Vec3 q = spec.has_taper() ? taper(p, spec.kx, spec.ky, spec.a3) : p;
  if (spec.bend_radius) q = bend(q, *spec.bend_radius);
  return rotation_zyz(pose.euler) * q + pose.position;
}

SampledSurface apply_pipeline(const SampledSurface& surface) {
  if (surface.frame != Frame::Canonical) {
    throw Error(ErrorCode::InvalidConfig, "deformation pipeline expects a canonical-frame surface");
  }
  const DeformationSpec spec = deformation_of(surface.params);
  const Pose pose = pose_of(surface.params);

  SampledSurface out = surface;
  if (!out.normals.empty()) transform_normals(out, spec, pose);

  std::vector<Vec3> points = spec.has_taper()
                                 ? taper_points(out.points, spec.kx, spec.ky, spec.a3)
                                 : std::move(out.points);
  if (spec.bend_radius) points = bend_points(points, *spec.bend_radius);
  out.points = pose_points(points, pose.euler, pose.position);
  out.frame = Frame::Deformed;
  return out;
}

std::vector<Vec3> canonical_points(std::span<const Vec3> points, const SuperquadricParams& params) {
  const DeformationSpec spec = deformation_of(params);
  const Mat3 inverse_rotation = rotation_zyz(params.euler).transpose();
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const auto& world : points) {
    Vec3 p = inverse_rotation * (world - params.position);
    if (spec.bend_radius) {
      const double k = *spec.bend_radius;
      p.x() -= k - std::sqrt(k * k + p.z() * p.z());
    }
    if (spec.has_taper()) {
      p.x() /= taper_factor(spec.kx, p.z(), spec.a3);
      p.y() /= taper_factor(spec.ky, p.z(), spec.a3);
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace sq
