#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "sqsample/math.hpp"
#include "sqsample/params.hpp"
#include "sqsample/surface.hpp"

namespace sq {

/// Nearest-neighbour spacing statistics of a point set.
struct SpacingStats {
  double mean = 0.0;
  double cv = 0.0;             // population standard deviation / mean
  double max_min_ratio = 1.0;  // infinite when two points coincide
  std::size_t count = 0;
};

/// Exact nearest-neighbour distance per point (k-d tree). Throws
/// Error(TooFewPoints) for fewer than two points.
SpacingStats nn_spacing_stats(std::span<const Vec3> points);

/// max |F - 1| over canonical-frame points.
double implicit_residual(std::span<const Vec3> canonical, const SuperquadricParams& params);

/// max |F - 1| over the surface. Deformed surfaces are mapped back to the
/// canonical frame first.
double surface_residual(const SampledSurface& surface);

struct CloudDistance {
  double directed = 0.0;   // mean over a in A of min over b in B of |a - b|
  double symmetric = 0.0;  // average of both directed distances
};

/// Throws Error(TooFewPoints) when either cloud is empty.
CloudDistance cloud_distance(std::span<const Vec3> a, std::span<const Vec3> b);

struct MetricsReport {
  double nn_mean = 0.0;
  double nn_cv = 0.0;
  double nn_max_min_ratio = 1.0;
  std::optional<double> implicit_residual_max;
  std::size_t point_count = 0;
};

/// Spacing statistics plus, when params are given, the implicit residual of
/// the points after undoing that superquadric's pose and deformation.
MetricsReport make_report(std::span<const Vec3> points, const SuperquadricParams* params = nullptr);

}  // namespace sq
