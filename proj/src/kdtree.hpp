#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "sqsample/math.hpp"

namespace sq::detail {

/// Static 3-d tree for exact nearest-neighbour queries. Keeps a view of the
/// points; they must outlive the tree.
class KdTree {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Hit {
    std::size_t index = npos;
    double distance_sq = std::numeric_limits<double>::infinity();
  };

  explicit KdTree(std::span<const Vec3> points);

  /// Nearest stored point to `query`, ignoring the point at index `exclude`.
  Hit nearest(const Vec3& query, std::size_t exclude = npos) const;

 private:
  void build(std::size_t lo, std::size_t hi, int axis);
  void search(std::size_t lo, std::size_t hi, int axis, const Vec3& query, std::size_t exclude,
              Hit& best) const;

  std::span<const Vec3> points_;
  std::vector<std::size_t> order_;
};

}  // namespace sq::detail
