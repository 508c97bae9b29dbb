/*
 * sqsample.h - C interface to the superquadric point-cloud sampler.
 *
 * Fallible functions return an sq_status. Objects are opaque handles created
 * by the generate/read/run calls and released with the matching *_free.
 * On failure, sq_last_error() returns a human-readable message for the
 * calling thread.
 */
#ifndef SQSAMPLE_H
#define SQSAMPLE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SQ_BUILDING_LIBRARY)
#    define SQ_API __declspec(dllexport)
#  else
#    define SQ_API __declspec(dllimport)
#  endif
#else
#  define SQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sq_status {
  SQ_OK = 0,
  SQ_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad enum, malformed grid */
  SQ_ERR_VALIDATION = 2,       /* parameters violate an invariant; see sq_validate */
  SQ_ERR_INVALID_CONFIG = 3,
  SQ_ERR_WRONG_KIND = 4,
  SQ_ERR_NON_FINITE = 5,
  SQ_ERR_SAMPLE_CAP = 6,
  SQ_ERR_DEGENERATE_NORMAL = 7,
  SQ_ERR_TOO_FEW_POINTS = 8,
  SQ_ERR_IO = 9,
  SQ_ERR_PARSE = 10,
  SQ_ERR_INTERNAL = 99
} sq_status;

/* Bit flags reported by sq_validate. */
typedef enum sq_issue {
  SQ_ISSUE_NON_POSITIVE_SCALE = 1u << 0,
  SQ_ISSUE_EPS_OUT_OF_RANGE = 1u << 1,
  SQ_ISSUE_SCALE_RATIO_TOO_LARGE = 1u << 2,
  SQ_ISSUE_TAPER_OUT_OF_RANGE = 1u << 3,
  SQ_ISSUE_BEND_RADIUS_TOO_SMALL = 1u << 4,
  SQ_ISSUE_NON_FINITE_PARAMETER = 1u << 5
} sq_issue;

typedef enum sq_kind { SQ_SUPERELLIPSOID = 0, SQ_SUPERPARABOLOID = 1 } sq_kind;

typedef enum sq_format { SQ_FORMAT_PLY = 0, SQ_FORMAT_OBJ = 1, SQ_FORMAT_CSV = 2 } sq_format;

typedef struct sq_params {
  sq_kind kind;
  double a1, a2, a3;  /* scale */
  double eps1, eps2;  /* shape exponents */
  double euler[3];    /* ZYZ angles theta, phi, psi (radians) */
  double position[3];
  double taper[2];    /* Kx, Ky */
  int bend_enabled;   /* 0: no bending, otherwise bend_k is used */
  double bend_k;
} sq_params;

typedef struct sq_config {
  double spacing;
  double theta_singular;
  size_t max_samples_per_curve;
} sq_config;

typedef struct sq_metrics {
  double nn_mean;
  double nn_cv;
  double nn_max_min_ratio;
  int has_residual;
  double implicit_residual_max;
  size_t point_count;
} sq_metrics;

typedef struct sq_bench_row {
  sq_kind kind;
  double eps1, eps2, spacing;
  size_t points;
  double median_ms;
  unsigned reps;
  int failed;
} sq_bench_row;

/* Called after each finished cell; may be NULL. */
typedef void (*sq_bench_progress)(const sq_bench_row* row, void* user);

typedef struct sq_bench_grid {
  sq_kind kind;
  const double* eps_values; /* eps1 = eps2 = eps for every cell */
  size_t eps_count;
  const double* spacings;
  size_t spacing_count;
  unsigned repetitions;
  sq_bench_progress progress;
  void* user;
} sq_bench_grid;

typedef struct sq_cloud sq_cloud; /* points with optional normals */
typedef struct sq_bench sq_bench; /* benchmark results */

SQ_API const char* sq_status_string(sq_status status);
SQ_API const char* sq_issue_name(unsigned issue_bit);
SQ_API const char* sq_last_error(void);
SQ_API const char* sq_version(void);

/* Unit sphere, no pose, no deformation. */
SQ_API void sq_params_default(sq_params* params);
SQ_API void sq_config_default(sq_config* config, double spacing);

/* *issues receives a mask of sq_issue bits; returns SQ_ERR_VALIDATION if non-zero. */
SQ_API sq_status sq_validate(const sq_params* params, unsigned* issues);

/* Sample, attach normals, deform and pose. */
SQ_API sq_status sq_generate(const sq_params* params, const sq_config* config, sq_cloud** out);
/* Uniform parameter grid baseline (n_first x n_omega per octant). */
SQ_API sq_status sq_generate_naive(const sq_params* params, size_t n_first, size_t n_omega,
                                   sq_cloud** out);
/* Reads PLY, OBJ or CSV chosen by extension. */
SQ_API sq_status sq_cloud_read(const char* path, sq_cloud** out);
SQ_API void sq_cloud_free(sq_cloud* cloud);

SQ_API size_t sq_cloud_size(const sq_cloud* cloud);
SQ_API int sq_cloud_has_normals(const sq_cloud* cloud);
/* Copy up to `capacity` xyz triples into `out` (3 * capacity doubles). */
SQ_API sq_status sq_cloud_copy_points(const sq_cloud* cloud, double* out, size_t capacity);
SQ_API sq_status sq_cloud_copy_normals(const sq_cloud* cloud, double* out, size_t capacity);
/* path "-" writes to standard output. */
SQ_API sq_status sq_cloud_write(const sq_cloud* cloud, sq_format format, const char* path);

/* params may be NULL; otherwise the residual is computed after undoing pose and deformation. */
SQ_API sq_status sq_cloud_metrics(const sq_cloud* cloud, const sq_params* params, sq_metrics* out);
SQ_API sq_status sq_cloud_distance(const sq_cloud* a, const sq_cloud* b, double* directed,
                                   double* symmetric);

SQ_API sq_status sq_bench_run(const sq_bench_grid* grid, sq_bench** out);
/* Desk-scale grid, or the full-scale grid (eps step 0.05, D step 0.001,
   1000 repetitions) when full_grid != 0.
   repetitions == 0 keeps the grid's default. */
SQ_API sq_status sq_bench_run_preset(sq_kind kind, int full_grid, unsigned repetitions,
                                     sq_bench_progress progress, void* user, sq_bench** out);
SQ_API size_t sq_bench_size(const sq_bench* bench);
SQ_API sq_status sq_bench_row_at(const sq_bench* bench, size_t index, sq_bench_row* out);
/* path "-" writes to standard output. */
SQ_API sq_status sq_bench_write_csv(const sq_bench* bench, const char* path);
SQ_API void sq_bench_free(sq_bench* bench);

#ifdef __cplusplus
}
#endif

#endif /* SQSAMPLE_H */
