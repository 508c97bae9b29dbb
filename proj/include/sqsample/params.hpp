#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sqsample/errors.hpp"
#include "sqsample/math.hpp"

namespace sq {

enum class ShapeKind { Superellipsoid, Superparaboloid };

struct Scale {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;
};

struct ShapeExponents {
  double eps1 = 1.0;
  double eps2 = 1.0;
};

/// Orientation as R = Rz(theta) * Ry(phi) * Rz(psi), radians.
struct EulerZYZ {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
};

struct TaperFactors {
  double kx = 0.0;
  double ky = 0.0;
};

/// Full superquadric description: scale, shape, pose, taper and bend.
/// An empty bend_radius disables bending.
struct SuperquadricParams {
  ShapeKind kind = ShapeKind::Superellipsoid;
  Scale scale;
  ShapeExponents shape;
  EulerZYZ euler;
  Vec3 position = Vec3::Zero();
  TaperFactors taper;
  std::optional<double> bend_radius;
};

// Supported envelope. Exponents 2/eps appear everywhere, so the lower bound
// is strictly positive.
inline constexpr double kMinEps = 0.01;
inline constexpr double kMaxEps = 2.0;
inline constexpr double kMaxScaleRatio = 10.0;

/// Every violated invariant, in a fixed order. Empty means valid.
std::vector<Issue> find_issues(const SuperquadricParams& params);

/// Parameters that passed validation. Only validate() can produce one.
class ValidatedParams {
 public:
  const SuperquadricParams& get() const noexcept { return params_; }
  const SuperquadricParams* operator->() const noexcept { return &params_; }

 private:
  explicit ValidatedParams(const SuperquadricParams& params) : params_(params) {}
  friend ValidatedParams validate(const SuperquadricParams& params);

  SuperquadricParams params_;
};

/// Returns the parameters unchanged or throws ValidationError listing every
/// violated invariant.
ValidatedParams validate(const SuperquadricParams& params);

/// Superellipsoid inside-outside function in the canonical frame:
/// < 1 inside, 1 on the surface, > 1 outside. Uses |x/a| before the
/// fractional powers so it is real in every octant.
double inside_outside_se(const Vec3& x, const SuperquadricParams& params);

/// Superparaboloid inside-outside function in the canonical frame.
///
/// Substituting r(u, w) = (a1 u cos^e2 w, a2 u sin^e2 w, a3 (u^(2/e1) - 1))
/// gives u^(2/e1) - (u^(2/e1) - 1) = 1, so the surface is the level set F = 1.
double inside_outside_sp(const Vec3& x, const SuperquadricParams& params);

/// Dispatches on params.kind.
double inside_outside(const Vec3& x, const SuperquadricParams& params);

struct SamplingConfig {
  /// Target spacing between consecutive samples along each generating curve.
  double spacing = 0.05;
  /// Angular distance from 0 or pi/2 below which the endpoint step formulas apply.
  double theta_singular = 0.01;
  std::size_t max_samples_per_curve = std::size_t{1} << 20;
};

/// Throws Error(InvalidConfig) unless spacing > 0, theta_singular in
/// (0, pi/4) and max_samples_per_curve >= 2.
void check_config(const SamplingConfig& config);

}  // namespace sq
