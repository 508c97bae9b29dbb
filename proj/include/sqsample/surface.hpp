#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sqsample/math.hpp"
#include "sqsample/params.hpp"
#include "sqsample/sampler2d.hpp"

namespace sq {

/// Surface parameters that produced a point: (eta, omega) for
/// superellipsoids, (u, omega) for superparaboloids. Values are signed, i.e.
/// they already include the octant mirroring.
struct ParamCoord {
  double first = 0.0;
  double omega = 0.0;
};

enum class Frame {
  Canonical,  // centred, axis-aligned, no taper or bend
  Deformed,   // after taper, bend, rotation and translation
};

struct SampledSurface {
  std::vector<Vec3> points;
  std::vector<Vec3> normals;  // empty until normals are attached
  std::vector<ParamCoord> param_coords;
  SuperquadricParams params;
  Frame frame = Frame::Canonical;

  std::size_t size() const noexcept { return points.size(); }
};

/// Mirrored copies closer than this are treated as the same point.
inline constexpr double kSeamTolerance = 1e-9;

/// Closely spaced superellipsoid samples. eta angles come from the (1, a3, eps1)
/// superellipse and omega angles from the (a1, a2, eps2) superellipse; their
/// product over the first octant is mirrored into all eight octants and seam
/// duplicates are removed. Output order is octant-major, then eta, then omega.
SampledSurface sample_superellipsoid(const ValidatedParams& params, const SamplingConfig& config);

/// Closely spaced superparaboloid samples: u from the (a3, eps1) superparabola,
/// omega from the (a1, a2, eps2) superellipse, mirrored into four quadrants.
SampledSurface sample_superparaboloid(const ValidatedParams& params, const SamplingConfig& config);

/// Dispatches on params->kind.
SampledSurface sample_surface(const ValidatedParams& params, const SamplingConfig& config);

/// Baseline: uniform n_first x n_omega grid over the first octant (eta or u
/// by omega), pushed through the parametric form and mirrored like the
/// closely spaced samplers. Throws Error(InvalidConfig) for grids below 2x2.
SampledSurface naive_sample(const ValidatedParams& params, std::size_t n_first,
                            std::size_t n_omega);

/// First-octant (superellipsoid) or first-quadrant (superparaboloid) product
/// grid before mirroring and seam removal; first-parameter-major.
std::vector<Vec3> first_octant_grid(const SuperquadricParams& params,
                                    std::span<const double> first_values,
                                    std::span<const double> omega_values);

/// Canonical-frame surface point r(eta, omega) or r(u, omega) for signed parameters.
Vec3 surface_point(const SuperquadricParams& params, double first, double omega);

}  // namespace sq
