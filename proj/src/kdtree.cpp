#include "kdtree.hpp"

#include <algorithm>
#include <numeric>

namespace sq::detail {

namespace {
constexpr std::size_t kLeafSize = 8;
}

KdTree::KdTree(std::span<const Vec3> points) : points_(points), order_(points.size()) {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  build(0, order_.size(), 0);
}

void KdTree::build(std::size_t lo, std::size_t hi, int axis) {
  if (hi - lo <= kLeafSize) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(lo),
                   order_.begin() + static_cast<std::ptrdiff_t>(mid),
                   order_.begin() + static_cast<std::ptrdiff_t>(hi),
                   [&](std::size_t a, std::size_t b) { return points_[a][axis] < points_[b][axis]; });
  const int next = (axis + 1) % 3;
  build(lo, mid, next);
  build(mid + 1, hi, next);
}

KdTree::Hit KdTree::nearest(const Vec3& query, std::size_t exclude) const {
  Hit best;
  if (!order_.empty()) search(0, order_.size(), 0, query, exclude, best);
  return best;
}

void KdTree::search(std::size_t lo, std::size_t hi, int axis, const Vec3& query,
                    std::size_t exclude, Hit& best) const {
  if (hi - lo <= kLeafSize) {
    for (std::size_t i = lo; i < hi; ++i) {
      const std::size_t idx = order_[i];
      if (idx == exclude) continue;
      const double d = (points_[idx] - query).squaredNorm();
      if (d < best.distance_sq) best = {idx, d};
    }
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const std::size_t idx = order_[mid];
  if (idx != exclude) {
    const double d = (points_[idx] - query).squaredNorm();
    if (d < best.distance_sq) best = {idx, d};
  }
  const double diff = query[axis] - points_[idx][axis];
  const int next = (axis + 1) % 3;
  if (diff < 0.0) {
    search(lo, mid, next, query, exclude, best);
    if (diff * diff < best.distance_sq) search(mid + 1, hi, next, query, exclude, best);
  } else {
    search(mid + 1, hi, next, query, exclude, best);
    if (diff * diff < best.distance_sq) search(lo, mid, next, query, exclude, best);
  }
}

}  // namespace sq::detail
