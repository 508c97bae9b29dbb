#include "sqsample/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "kdtree.hpp"
#include "sqsample/deform.hpp"

namespace sq {

SpacingStats nn_spacing_stats(std::span<const Vec3> points) {
  if (points.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "spacing statistics need at least two points");
  }
  const detail::KdTree tree(points);
  std::vector<double> distances(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    distances[i] = std::sqrt(tree.nearest(points[i], i).distance_sq);
  }

  // Sorted accumulation keeps the result independent of input order.
  std::sort(distances.begin(), distances.end());
  const double n = static_cast<double>(distances.size());
  double sum = 0.0;
  for (double d : distances) sum += d;
  const double mean = sum / n;
  double var = 0.0;
  for (double d : distances) var += (d - mean) * (d - mean);
  var /= n;

  SpacingStats stats;
  stats.count = distances.size();
  stats.mean = mean;
  stats.cv = mean > 0.0 ? std::sqrt(var) / mean : 0.0;
  const double lo = distances.front();
  const double hi = distances.back();
  stats.max_min_ratio = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  return stats;
}

double implicit_residual(std::span<const Vec3> canonical, const SuperquadricParams& params) {
  double worst = 0.0;
  for (const auto& p : canonical) {
    const double r = std::fabs(inside_outside(p, params) - 1.0);
    // NaN (a point with no canonical preimage) must not be swallowed by max.
    if (!(r <= worst)) worst = std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
  }
  return worst;
}

double surface_residual(const SampledSurface& surface) {
  if (surface.frame == Frame::Canonical) return implicit_residual(surface.points, surface.params);
  const auto canonical = canonical_points(surface.points, surface.params);
  return implicit_residual(canonical, surface.params);
}

namespace {

double directed_mean(std::span<const Vec3> from, const detail::KdTree& to) {
  double sum = 0.0;
  for (const auto& p : from) sum += std::sqrt(to.nearest(p).distance_sq);
  return sum / static_cast<double>(from.size());
}

}  // namespace

CloudDistance cloud_distance(std::span<const Vec3> a, std::span<const Vec3> b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::TooFewPoints, "cloud distance needs two non-empty clouds");
  }
  const detail::KdTree tree_a(a);
  const detail::KdTree tree_b(b);
  CloudDistance out;
  out.directed = directed_mean(a, tree_b);
  out.symmetric = 0.5 * (out.directed + directed_mean(b, tree_a));
  return out;
}

MetricsReport make_report(std::span<const Vec3> points, const SuperquadricParams* params) {
  const SpacingStats stats = nn_spacing_stats(points);
  MetricsReport report;
  report.nn_mean = stats.mean;
  report.nn_cv = stats.cv;
  report.nn_max_min_ratio = stats.max_min_ratio;
  report.point_count = stats.count;
  if (params) {
    report.implicit_residual_max = implicit_residual(canonical_points(points, *params), *params);
  }
  return report;
}

}  // namespace sq
