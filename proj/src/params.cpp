#include "sqsample/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sq {

namespace {

std::string describe(const char* name, double value) {
  std::ostringstream os;
  os << name << '=' << value;
  return os.str();
}

bool finite(const Vec3& v) { return v.allFinite(); }

}  // namespace

std::vector<Issue> find_issues(const SuperquadricParams& p) {
  std::vector<Issue> issues;

  const double scales[] = {p.scale.a1, p.scale.a2, p.scale.a3};
  const char* scale_names[] = {"a1", "a2", "a3"};
  bool scales_ok = true;
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(scales[i])) {
      issues.push_back({ErrorCode::NonFiniteParameter, describe(scale_names[i], scales[i])});
      scales_ok = false;
    } else if (scales[i] <= 0.0) {
      issues.push_back({ErrorCode::NonPositiveScale, describe(scale_names[i], scales[i])});
      scales_ok = false;
    }
  }

  const double eps[] = {p.shape.eps1, p.shape.eps2};
  const char* eps_names[] = {"eps1", "eps2"};
  for (int i = 0; i < 2; ++i) {
    // NaN fails both comparisons and lands here too.
    if (!(eps[i] >= kMinEps && eps[i] <= kMaxEps)) {
      issues.push_back({ErrorCode::EpsOutOfRange, describe(eps_names[i], eps[i])});
    }
  }

  if (scales_ok) {
    const double hi = std::max({p.scale.a1, p.scale.a2, p.scale.a3});
    const double lo = std::min({p.scale.a1, p.scale.a2, p.scale.a3});
    if (hi / lo > kMaxScaleRatio) {
      issues.push_back({ErrorCode::ScaleRatioTooLarge, describe("max/min", hi / lo)});
    }
  }

  if (!(std::fabs(p.taper.kx) <= 1.0)) {
    issues.push_back({ErrorCode::TaperOutOfRange, describe("kx", p.taper.kx)});
  }
  if (!(std::fabs(p.taper.ky) <= 1.0)) {
    issues.push_back({ErrorCode::TaperOutOfRange, describe("ky", p.taper.ky)});
  }

  if (p.bend_radius) {
    const double k = *p.bend_radius;
    if (!std::isfinite(k)) {
      issues.push_back({ErrorCode::NonFiniteParameter, describe("bend_k", k)});
    } else if (scales_ok && k < p.scale.a3) {
      issues.push_back({ErrorCode::BendRadiusTooSmall, describe("bend_k", k)});
    } else if (k <= 0.0) {
      issues.push_back({ErrorCode::BendRadiusTooSmall, describe("bend_k", k)});
    }
  }

  if (!std::isfinite(p.euler.theta) || !std::isfinite(p.euler.phi) ||
      !std::isfinite(p.euler.psi)) {
    issues.push_back({ErrorCode::NonFiniteParameter, "euler angles"});
  }
  if (!finite(p.position)) {
    issues.push_back({ErrorCode::NonFiniteParameter, "position"});
  }
  return issues;
}

ValidatedParams validate(const SuperquadricParams& params) {
  auto issues = find_issues(params);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return ValidatedParams(params);
}

double inside_outside_se(const Vec3& x, const SuperquadricParams& p) {
  const double e1 = p.shape.eps1;
  const double e2 = p.shape.eps2;
  const double fx = std::pow(std::fabs(x.x() / p.scale.a1), 2.0 / e2);
  const double fy = std::pow(std::fabs(x.y() / p.scale.a2), 2.0 / e2);
  const double fz = std::pow(std::fabs(x.z() / p.scale.a3), 2.0 / e1);
  return std::pow(fx + fy, e2 / e1) + fz;
}

double inside_outside_sp(const Vec3& x, const SuperquadricParams& p) {
  const double e1 = p.shape.eps1;
  const double e2 = p.shape.eps2;
  const double fx = std::pow(std::fabs(x.x() / p.scale.a1), 2.0 / e2);
  const double fy = std::pow(std::fabs(x.y() / p.scale.a2), 2.0 / e2);
  return std::pow(fx + fy, e2 / e1) - x.z() / p.scale.a3;
}

double inside_outside(const Vec3& x, const SuperquadricParams& params) {
  return params.kind == ShapeKind::Superellipsoid ? inside_outside_se(x, params)
                                                  : inside_outside_sp(x, params);
}

void check_config(const SamplingConfig& config) {
  if (!(config.spacing > 0.0) || !std::isfinite(config.spacing)) {
    throw Error(ErrorCode::InvalidConfig, describe("spacing", config.spacing));
  }
  if (!(config.theta_singular > 0.0 && config.theta_singular < kQuarterPi)) {
    throw Error(ErrorCode::InvalidConfig, describe("theta_singular", config.theta_singular));
  }
  if (config.max_samples_per_curve < 2) {
    throw Error(ErrorCode::InvalidConfig, "max_samples_per_curve must be at least 2");
  }
}

}  // namespace sq
