#include "sqsample/normals.hpp"

#include <cmath>
#include <sstream>

namespace sq {

namespace {

constexpr double kDegenerateMagnitude = 1e-300;

Vec3 unit_or_throw(const Vec3& n, const char* where) {
  const double magnitude = n.norm();
  if (!(magnitude >= kDegenerateMagnitude) || !std::isfinite(magnitude)) {
    std::ostringstream os;
    os << where << ": normal magnitude " << magnitude;
    throw Error(ErrorCode::DegenerateNormal, os.str());
  }
  return n / magnitude;
}

double clamp_taper(double f) {
  if (std::fabs(f) >= kTaperClamp) return f;
  return f < 0.0 ? -kTaperClamp : kTaperClamp;
}

}  // namespace

Vec3 se_normal(double eta, double omega, const SuperquadricParams& p) {
  const CosSin e = cos_sin(eta);
  const CosSin w = cos_sin(omega);
  const double pe = 2.0 - p.shape.eps1;
  const double pw = 2.0 - p.shape.eps2;
  const double ce = signed_pow(e.cos, pe);
  const Vec3 n(ce * signed_pow(w.cos, pw) / p.scale.a1, ce * signed_pow(w.sin, pw) / p.scale.a2,
               signed_pow(e.sin, pe) / p.scale.a3);
  return unit_or_throw(n, "superellipsoid");
}

Vec3 sp_normal(double u, double omega, const SuperquadricParams& p) {
  if (u == 0.0) return {0.0, 0.0, -1.0};
  // The dual vector scaled by u^(2/e1 - 2) > 0; bounded for every e1 <= 2.
  const CosSin w = cos_sin(omega);
  const double e1 = p.shape.eps1;
  const double pw = 2.0 - p.shape.eps2;
  const double radial = std::pow(u, 2.0 / e1 - 1.0);
  const Vec3 n(radial * signed_pow(w.cos, pw) / p.scale.a1,
               radial * signed_pow(w.sin, pw) / p.scale.a2, -0.5 * e1 / p.scale.a3);
  return unit_or_throw(n, "superparaboloid");
}

NormalTransform taper_normal_transform(const Vec3& p, double kx, double ky, double a3) {
  const double fx = clamp_taper(taper_factor(kx, p.z(), a3));
  const double fy = clamp_taper(taper_factor(ky, p.z(), a3));
  const double dfx = kx / a3;
  const double dfy = ky / a3;
  NormalTransform t;
  t.matrix << 1.0 / fx, 0.0, 0.0,
              0.0, 1.0 / fy, 0.0,
              -dfx * p.x() / fx, -dfy * p.y() / fy, 1.0;
  return t;
}

NormalTransform bend_normal_transform(double z, double k) {
  NormalTransform t;
  t.matrix(2, 0) = z / std::sqrt(k * k + z * z);
  return t;
}

void attach_normals(SampledSurface& surface) {
  const SuperquadricParams& p = surface.params;
  surface.normals.clear();
  surface.normals.reserve(surface.param_coords.size());
  if (p.kind == ShapeKind::Superellipsoid) {
    for (const auto& pc : surface.param_coords) surface.normals.push_back(se_normal(pc.first, pc.omega, p));
  } else {
    for (const auto& pc : surface.param_coords) surface.normals.push_back(sp_normal(pc.first, pc.omega, p));
  }
}

void transform_normals(SampledSurface& surface, const DeformationSpec& spec, const Pose& pose) {
  if (surface.frame != Frame::Canonical) {
    throw Error(ErrorCode::InvalidConfig, "normal transform expects canonical-frame points");
  }
  if (surface.normals.size() != surface.points.size()) {
    throw Error(ErrorCode::InvalidConfig, "surface has no normals to transform");
  }
  const Mat3 rotation = rotation_zyz(pose.euler);
  const bool tapered = spec.has_taper();
  for (std::size_t i = 0; i < surface.points.size(); ++i) {
    const Vec3& p = surface.points[i];
    Vec3 n = surface.normals[i];
    if (tapered) n = taper_normal_transform(p, spec.kx, spec.ky, spec.a3).apply(n);
    // Taper keeps z, so the bend sees the same height.
    if (spec.bend_radius) n = bend_normal_transform(p.z(), *spec.bend_radius).apply(n);
    surface.normals[i] = unit_or_throw(rotation * n, "deformed surface");
  }
}

}  // namespace sq
