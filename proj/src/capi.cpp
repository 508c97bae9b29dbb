#include "sqsample/sqsample.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "sqsample/bench.hpp"
#include "sqsample/io.hpp"
#include "sqsample/metrics.hpp"
#include "sqsample/params.hpp"
#include "sqsample/pipeline.hpp"

struct sq_cloud {
  sq::PointCloud cloud;
};

struct sq_bench {
  std::vector<sq::BenchRecord> records;
};

namespace {

thread_local std::string g_last_error;

sq_status set_error(sq_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

sq_status status_of(sq::ErrorCode code) {
  using sq::ErrorCode;
  switch (code) {
    case ErrorCode::NonPositiveScale:
    case ErrorCode::EpsOutOfRange:
    case ErrorCode::ScaleRatioTooLarge:
    case ErrorCode::TaperOutOfRange:
    case ErrorCode::BendRadiusTooSmall:
    case ErrorCode::NonFiniteParameter: return SQ_ERR_VALIDATION;
    case ErrorCode::InvalidConfig: return SQ_ERR_INVALID_CONFIG;
    case ErrorCode::WrongKind: return SQ_ERR_WRONG_KIND;
    case ErrorCode::NonFiniteResult: return SQ_ERR_NON_FINITE;
    case ErrorCode::SampleCapExceeded: return SQ_ERR_SAMPLE_CAP;
    case ErrorCode::DegenerateNormal: return SQ_ERR_DEGENERATE_NORMAL;
    case ErrorCode::TooFewPoints: return SQ_ERR_TOO_FEW_POINTS;
    case ErrorCode::IoError: return SQ_ERR_IO;
    case ErrorCode::ParseError: return SQ_ERR_PARSE;
  }
  return SQ_ERR_INTERNAL;
}

unsigned issue_bit(sq::ErrorCode code) {
  using sq::ErrorCode;
  switch (code) {
    case ErrorCode::NonPositiveScale: return SQ_ISSUE_NON_POSITIVE_SCALE;
    case ErrorCode::EpsOutOfRange: return SQ_ISSUE_EPS_OUT_OF_RANGE;
    case ErrorCode::ScaleRatioTooLarge: return SQ_ISSUE_SCALE_RATIO_TOO_LARGE;
    case ErrorCode::TaperOutOfRange: return SQ_ISSUE_TAPER_OUT_OF_RANGE;
    case ErrorCode::BendRadiusTooSmall: return SQ_ISSUE_BEND_RADIUS_TOO_SMALL;
    default: return SQ_ISSUE_NON_FINITE_PARAMETER;
  }
}

// Every entry point runs its body through this so no exception crosses the C boundary.
template <typename F>
sq_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const sq::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SQ_ERR_INTERNAL, "unknown error");
  }
}

bool valid_kind(sq_kind kind) { return kind == SQ_SUPERELLIPSOID || kind == SQ_SUPERPARABOLOID; }

sq::SuperquadricParams to_cpp(const sq_params& in) {
  sq::SuperquadricParams p;
  p.kind = in.kind == SQ_SUPERPARABOLOID ? sq::ShapeKind::Superparaboloid
                                         : sq::ShapeKind::Superellipsoid;
  p.scale = {in.a1, in.a2, in.a3};
  p.shape = {in.eps1, in.eps2};
  p.euler = {in.euler[0], in.euler[1], in.euler[2]};
  p.position = sq::Vec3(in.position[0], in.position[1], in.position[2]);
  p.taper = {in.taper[0], in.taper[1]};
  if (in.bend_enabled) p.bend_radius = in.bend_k;
  return p;
}

sq::SamplingConfig to_cpp(const sq_config& in) {
  sq::SamplingConfig c;
  c.spacing = in.spacing;
  c.theta_singular = in.theta_singular;
  c.max_samples_per_curve = in.max_samples_per_curve;
  return c;
}

sq::ShapeKind to_cpp(sq_kind kind) {
  return kind == SQ_SUPERPARABOLOID ? sq::ShapeKind::Superparaboloid
                                    : sq::ShapeKind::Superellipsoid;
}

sq_bench_row to_c(const sq::BenchRecord& r) {
  sq_bench_row row;
  row.kind = r.kind == sq::ShapeKind::Superparaboloid ? SQ_SUPERPARABOLOID : SQ_SUPERELLIPSOID;
  row.eps1 = r.eps1;
  row.eps2 = r.eps2;
  row.spacing = r.spacing;
  row.points = r.points;
  row.median_ms = r.median_ms;
  row.reps = r.reps;
  row.failed = r.error ? 1 : 0;
  return row;
}

sq_status give_cloud(sq::SampledSurface surface, sq_cloud** out) {
  auto* handle = new sq_cloud;
  handle->cloud.points = std::move(surface.points);
  handle->cloud.normals = std::move(surface.normals);
  *out = handle;
  return SQ_OK;
}

sq::ExportFormat to_cpp(sq_format format) {
  switch (format) {
    case SQ_FORMAT_OBJ: return sq::ExportFormat::Obj;
    case SQ_FORMAT_CSV: return sq::ExportFormat::Csv;
    case SQ_FORMAT_PLY: break;
  }
  return sq::ExportFormat::PlyAscii;
}

bool is_stdout(const char* path) { return std::strcmp(path, "-") == 0; }

sq_status run_grid(const sq::BenchGrid& grid, sq_bench_progress progress, void* user,
                   sq_bench** out) {
  sq::BenchProgress callback;
  if (progress) {
    callback = [progress, user](const sq::BenchRecord& r) {
      const sq_bench_row row = to_c(r);
      progress(&row, user);
    };
  }
  auto* handle = new sq_bench;
  handle->records = sq::run_bench(grid, callback);
  *out = handle;
  return SQ_OK;
}

}  // namespace

extern "C" {

SQ_API const char* sq_status_string(sq_status status) {
  switch (status) {
    case SQ_OK: return "ok";
    case SQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SQ_ERR_VALIDATION: return "parameter validation failed";
    case SQ_ERR_INVALID_CONFIG: return "invalid sampling configuration";
    case SQ_ERR_WRONG_KIND: return "wrong superquadric kind";
    case SQ_ERR_NON_FINITE: return "non-finite result";
    case SQ_ERR_SAMPLE_CAP: return "sample cap exceeded";
    case SQ_ERR_DEGENERATE_NORMAL: return "degenerate normal";
    case SQ_ERR_TOO_FEW_POINTS: return "too few points";
    case SQ_ERR_IO: return "i/o error";
    case SQ_ERR_PARSE: return "parse error";
    case SQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

SQ_API const char* sq_issue_name(unsigned issue) {
  switch (issue) {
    case SQ_ISSUE_NON_POSITIVE_SCALE: return "NonPositiveScale";
    case SQ_ISSUE_EPS_OUT_OF_RANGE: return "EpsOutOfRange";
    case SQ_ISSUE_SCALE_RATIO_TOO_LARGE: return "ScaleRatioTooLarge";
    case SQ_ISSUE_TAPER_OUT_OF_RANGE: return "TaperOutOfRange";
    case SQ_ISSUE_BEND_RADIUS_TOO_SMALL: return "BendRadiusTooSmall";
    case SQ_ISSUE_NON_FINITE_PARAMETER: return "NonFiniteParameter";
    default: return "Unknown";
  }
}

SQ_API const char* sq_last_error(void) { return g_last_error.c_str(); }

SQ_API const char* sq_version(void) { return "1.0.0"; }

SQ_API void sq_params_default(sq_params* params) {
  if (!params) return;
  *params = sq_params{};
  params->kind = SQ_SUPERELLIPSOID;
  params->a1 = params->a2 = params->a3 = 1.0;
  params->eps1 = params->eps2 = 1.0;
}

SQ_API void sq_config_default(sq_config* config, double spacing) {
  if (!config) return;
  const sq::SamplingConfig defaults;
  config->spacing = spacing;
  config->theta_singular = defaults.theta_singular;
  config->max_samples_per_curve = defaults.max_samples_per_curve;
}

SQ_API sq_status sq_validate(const sq_params* params, unsigned* issues) {
  return guarded([&] {
    if (!params || !issues) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    if (!valid_kind(params->kind)) return set_error(SQ_ERR_INVALID_ARGUMENT, "bad kind");
    *issues = 0;
    const auto found = sq::find_issues(to_cpp(*params));
    if (found.empty()) return SQ_OK;
    std::string message;
    for (const auto& issue : found) {
      *issues |= issue_bit(issue.code);
      if (!message.empty()) message += "; ";
      message += std::string(sq::to_string(issue.code)) + " (" + issue.detail + ")";
    }
    return set_error(SQ_ERR_VALIDATION, message);
  });
}

SQ_API sq_status sq_generate(const sq_params* params, const sq_config* config, sq_cloud** out) {
  return guarded([&] {
    if (!params || !config || !out) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    if (!valid_kind(params->kind)) return set_error(SQ_ERR_INVALID_ARGUMENT, "bad kind");
    *out = nullptr;
    const sq::ValidatedParams p = sq::validate(to_cpp(*params));
    return give_cloud(sq::generate(p, to_cpp(*config)), out);
  });
}

SQ_API sq_status sq_generate_naive(const sq_params* params, size_t n_first, size_t n_omega,
                                   sq_cloud** out) {
  return guarded([&] {
    if (!params || !out) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    if (!valid_kind(params->kind)) return set_error(SQ_ERR_INVALID_ARGUMENT, "bad kind");
    *out = nullptr;
    const sq::ValidatedParams p = sq::validate(to_cpp(*params));
    return give_cloud(sq::generate_naive(p, n_first, n_omega), out);
  });
}

SQ_API sq_status sq_cloud_read(const char* path, sq_cloud** out) {
  return guarded([&] {
    if (!path || !out) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto* handle = new sq_cloud;
    try {
      handle->cloud = sq::read_cloud_file(path);
    } catch (...) {
      delete handle;
      throw;
    }
    *out = handle;
    return SQ_OK;
  });
}

SQ_API void sq_cloud_free(sq_cloud* cloud) { delete cloud; }

SQ_API size_t sq_cloud_size(const sq_cloud* cloud) { return cloud ? cloud->cloud.points.size() : 0; }

SQ_API int sq_cloud_has_normals(const sq_cloud* cloud) {
  return cloud && !cloud->cloud.normals.empty() ? 1 : 0;
}

static sq_status copy_vectors(const std::vector<sq::Vec3>& src, double* out, size_t capacity) {
  const size_t n = std::min(capacity, src.size());
  for (size_t i = 0; i < n; ++i) {
    out[3 * i + 0] = src[i].x();
    out[3 * i + 1] = src[i].y();
    out[3 * i + 2] = src[i].z();
  }
  return SQ_OK;
}

SQ_API sq_status sq_cloud_copy_points(const sq_cloud* cloud, double* out, size_t capacity) {
  if (!cloud || (!out && capacity > 0)) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
  return copy_vectors(cloud->cloud.points, out, capacity);
}

SQ_API sq_status sq_cloud_copy_normals(const sq_cloud* cloud, double* out, size_t capacity) {
  if (!cloud || (!out && capacity > 0)) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
  return copy_vectors(cloud->cloud.normals, out, capacity);
}

SQ_API sq_status sq_cloud_write(const sq_cloud* cloud, sq_format format, const char* path) {
  return guarded([&] {
    if (!cloud || !path) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    if (format != SQ_FORMAT_PLY && format != SQ_FORMAT_OBJ && format != SQ_FORMAT_CSV) {
      return set_error(SQ_ERR_INVALID_ARGUMENT, "bad format");
    }
    const auto& c = cloud->cloud;
    if (is_stdout(path)) {
      sq::write_cloud(std::cout, c.points, c.normals, to_cpp(format));
      std::cout.flush();
      if (!std::cout) return set_error(SQ_ERR_IO, "failed writing to standard output");
    } else {
      sq::write_cloud_file(path, c.points, c.normals, to_cpp(format));
    }
    return SQ_OK;
  });
}

SQ_API sq_status sq_cloud_metrics(const sq_cloud* cloud, const sq_params* params, sq_metrics* out) {
  return guarded([&] {
    if (!cloud || !out) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    std::optional<sq::SuperquadricParams> p;
    if (params) {
      if (!valid_kind(params->kind)) return set_error(SQ_ERR_INVALID_ARGUMENT, "bad kind");
      p = sq::validate(to_cpp(*params)).get();
    }
    const sq::MetricsReport report = sq::make_report(cloud->cloud.points, p ? &*p : nullptr);
    out->nn_mean = report.nn_mean;
    out->nn_cv = report.nn_cv;
    out->nn_max_min_ratio = report.nn_max_min_ratio;
    out->has_residual = report.implicit_residual_max ? 1 : 0;
    out->implicit_residual_max = report.implicit_residual_max.value_or(0.0);
    out->point_count = report.point_count;
    return SQ_OK;
  });
}

SQ_API sq_status sq_cloud_distance(const sq_cloud* a, const sq_cloud* b, double* directed,
                                   double* symmetric) {
  return guarded([&] {
    if (!a || !b || !directed) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    const sq::CloudDistance d = sq::cloud_distance(a->cloud.points, b->cloud.points);
    *directed = d.directed;
    if (symmetric) *symmetric = d.symmetric;
    return SQ_OK;
  });
}

SQ_API sq_status sq_bench_run(const sq_bench_grid* grid, sq_bench** out) {
  return guarded([&] {
    if (!grid || !out) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    if (!valid_kind(grid->kind)) return set_error(SQ_ERR_INVALID_ARGUMENT, "bad kind");
    if ((grid->eps_count > 0 && !grid->eps_values) ||
        (grid->spacing_count > 0 && !grid->spacings)) {
      return set_error(SQ_ERR_INVALID_ARGUMENT, "null grid values");
    }
    sq::BenchGrid g;
    g.kind = to_cpp(grid->kind);
    g.eps_values.assign(grid->eps_values, grid->eps_values + grid->eps_count);
    g.spacings.assign(grid->spacings, grid->spacings + grid->spacing_count);
    g.repetitions = grid->repetitions;
    return run_grid(g, grid->progress, grid->user, out);
  });
}

SQ_API sq_status sq_bench_run_preset(sq_kind kind, int full_grid, unsigned repetitions,
                                     sq_bench_progress progress, void* user, sq_bench** out) {
  return guarded([&] {
    if (!out) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    if (!valid_kind(kind)) return set_error(SQ_ERR_INVALID_ARGUMENT, "bad kind");
    sq::BenchGrid g = full_grid ? sq::full_scale_grid(to_cpp(kind)) : sq::default_bench_grid(to_cpp(kind));
    if (repetitions > 0) g.repetitions = repetitions;
    return run_grid(g, progress, user, out);
  });
}

SQ_API size_t sq_bench_size(const sq_bench* bench) { return bench ? bench->records.size() : 0; }

SQ_API sq_status sq_bench_row_at(const sq_bench* bench, size_t index, sq_bench_row* out) {
  if (!bench || !out) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
  if (index >= bench->records.size()) return set_error(SQ_ERR_INVALID_ARGUMENT, "index out of range");
  *out = to_c(bench->records[index]);
  return SQ_OK;
}

SQ_API sq_status sq_bench_write_csv(const sq_bench* bench, const char* path) {
  return guarded([&] {
    if (!bench || !path) return set_error(SQ_ERR_INVALID_ARGUMENT, "null argument");
    if (is_stdout(path)) {
      sq::write_bench_csv(std::cout, bench->records);
      std::cout.flush();
      if (!std::cout) return set_error(SQ_ERR_IO, "failed writing to standard output");
      return SQ_OK;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return set_error(SQ_ERR_IO, std::string("cannot open '") + path + "' for writing");
    sq::write_bench_csv(out, bench->records);
    out.flush();
    if (!out) return set_error(SQ_ERR_IO, std::string("failed writing '") + path + "'");
    return SQ_OK;
  });
}

SQ_API void sq_bench_free(sq_bench* bench) { delete bench; }

}  // extern "C"
