#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sqsample/params.hpp"

namespace sq {

/// One timing cell: eps1 = eps2 = eps swept against the spacing.
struct BenchGrid {
  ShapeKind kind = ShapeKind::Superellipsoid;
  std::vector<double> eps_values;
  std::vector<double> spacings;
  unsigned repetitions = 31;
  Scale scale;
};

struct BenchRecord {
  ShapeKind kind = ShapeKind::Superellipsoid;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double spacing = 0.0;
  std::size_t points = 0;
  double median_ms = 0.0;
  unsigned reps = 0;
  std::optional<std::string> error;  // set when the cell failed
};

/// eps in {0.1, 0.3, ..., 1.9}, D in {0.01, 0.02, 0.05, 0.1, 0.2}, 31 repetitions.
BenchGrid default_bench_grid(ShapeKind kind);

/// eps from 0.1 to 2 in steps of 0.05, D from 0.005 to 0.2 in steps of 0.001,
/// 1000 repetitions.
BenchGrid full_scale_grid(ShapeKind kind);

/// Called after each finished cell; may be empty.
using BenchProgress = std::function<void(const BenchRecord&)>;

/// Times surface sampling for every (eps, D) cell; records come back
/// eps-major. Each cell gets one untimed warm-up and then `repetitions` timed
/// runs on a monotonic clock, one run at a time, and reports the median.
/// Runs of the cells that share a spacing are interleaved. A failing cell is
/// recorded with its error and the grid carries on. `progress` fires as each
/// spacing column completes.
std::vector<BenchRecord> run_bench(const BenchGrid& grid, const BenchProgress& progress = {});

/// "se" or "sp".
std::string_view kind_name(ShapeKind kind) noexcept;

/// Header `kind,eps1,eps2,D,points,median_ms,reps`, one LF-terminated row per
/// record. Failed cells report 0 points, nan time and 0 reps.
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace sq
