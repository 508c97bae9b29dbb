#include "sqsample/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>

#include "sqsample/surface.hpp"

namespace sq {

namespace {

std::vector<double> stepped(double first, double last, double step) {
  std::vector<double> values;
  const auto n = static_cast<long>(std::llround((last - first) / step));
  for (long i = 0; i <= n; ++i) {
    // Round to the step's precision so 0.1 + 3 * 0.05 prints as 0.25.
    values.push_back(std::round((first + static_cast<double>(i) * step) * 1e6) / 1e6);
  }
  return values;
}

double median(std::vector<double> values) {
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

// One (eps, D) cell while its repetitions are being collected.
struct Cell {
  BenchRecord record;
  std::optional<ValidatedParams> params;
  std::vector<double> times;
};

void fail(Cell& cell, const std::exception& e) {
  cell.params.reset();
  cell.record.error = e.what();
}

Cell prepare_cell(const BenchGrid& grid, double eps, double spacing) {
  Cell cell;
  cell.record.kind = grid.kind;
  cell.record.eps1 = eps;
  cell.record.eps2 = eps;
  cell.record.spacing = spacing;
  try {
    SuperquadricParams p;
    p.kind = grid.kind;
    p.scale = grid.scale;
    p.shape = {eps, eps};
    cell.params = validate(p);
    SamplingConfig config;
    config.spacing = spacing;
    cell.record.points = sample_surface(*cell.params, config).size();  // warm-up
    cell.times.reserve(grid.repetitions);
  } catch (const std::exception& e) {
    fail(cell, e);
  }
  return cell;
}

void time_once(Cell& cell) {
  using clock = std::chrono::steady_clock;
  if (!cell.params) return;
  try {
    SamplingConfig config;
    config.spacing = cell.record.spacing;
    const auto t0 = clock::now();
    const SampledSurface surface = sample_surface(*cell.params, config);
    const auto t1 = clock::now();
    if (surface.size() != cell.record.points) {
      throw Error(ErrorCode::NonFiniteResult, "sampler output size changed between runs");
    }
    cell.times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  } catch (const std::exception& e) {
    fail(cell, e);
  }
}

BenchRecord finish(Cell& cell, unsigned repetitions) {
  BenchRecord record = cell.record;
  if (record.error) {
    record.points = 0;
    record.median_ms = std::nan("");
    record.reps = 0;
  } else {
    record.median_ms = cell.times.empty() ? 0.0 : median(std::move(cell.times));
    record.reps = repetitions;
  }
  return record;
}

}  // namespace

BenchGrid default_bench_grid(ShapeKind kind) {
  BenchGrid grid;
  grid.kind = kind;
  grid.eps_values = stepped(0.1, 1.9, 0.2);
  grid.spacings = {0.01, 0.02, 0.05, 0.1, 0.2};
  grid.repetitions = 31;
  return grid;
}

BenchGrid full_scale_grid(ShapeKind kind) {
  BenchGrid grid;
  grid.kind = kind;
  grid.eps_values = stepped(0.1, 2.0, 0.05);
  grid.spacings = stepped(0.005, 0.2, 0.001);
  grid.repetitions = 1000;
  return grid;
}

std::vector<BenchRecord> run_bench(const BenchGrid& grid, const BenchProgress& progress) {
  const std::size_t n_eps = grid.eps_values.size();
  const std::size_t n_d = grid.spacings.size();
  std::vector<BenchRecord> records(n_eps * n_d);
  // Cells sharing a spacing are compared against each other, so their
  // repetitions are interleaved: slow spells on the machine then land on
  // every eps alike instead of on whichever cell happened to be running.
  for (std::size_t j = 0; j < n_d; ++j) {
    std::vector<Cell> column;
    column.reserve(n_eps);
    for (double eps : grid.eps_values) column.push_back(prepare_cell(grid, eps, grid.spacings[j]));
    for (unsigned r = 0; r < grid.repetitions; ++r) {
      for (auto& cell : column) time_once(cell);
    }
    for (std::size_t i = 0; i < n_eps; ++i) {
      records[i * n_d + j] = finish(column[i], grid.repetitions);
      if (progress) progress(records[i * n_d + j]);
    }
  }
  return records;
}

std::string_view kind_name(ShapeKind kind) noexcept {
  return kind == ShapeKind::Superellipsoid ? "se" : "sp";
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "kind,eps1,eps2,D,points,median_ms,reps\n";
  char line[256];
  for (const auto& r : records) {
    const std::string_view kind = kind_name(r.kind);
    std::snprintf(line, sizeof line, "%.*s,%.6g,%.6g,%.6g,%zu,%.6f,%u\n",
                  static_cast<int>(kind.size()), kind.data(), r.eps1, r.eps2, r.spacing, r.points,
                  r.median_ms, r.reps);
    out << line;
  }
}

}  // namespace sq
