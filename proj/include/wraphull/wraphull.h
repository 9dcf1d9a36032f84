/* C interface to the wraphull library. All functions return a status code
 * (WH_OK on success) unless noted; on failure wh_last_error() describes the
 * problem for the calling thread. Handles are opaque and owned by the
 * caller, who releases them with the matching *_free function. */
#ifndef WRAPHULL_H
#define WRAPHULL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WH_API __declspec(dllexport)
#else
#define WH_API __attribute__((visibility("default")))
#endif

/* Values match wraphull::ErrorCode. */
enum wh_status {
  WH_OK = 0,
  WH_INVALID_ARGUMENT = 1,
  WH_EMPTY_SAMPLE = 2,
  WH_BAD_RADIUS = 3,
  WH_UNBOUNDED_HULL = 4,
  WH_DEGENERATE_HULL = 5,
  WH_INCONSISTENT_HULL = 6,
  WH_ZERO_MEASURE = 7,
  WH_EMPTY_AGGREGATE = 8,
  WH_DUPLICATE_POINT = 9,
  WH_POINT_OUTSIDE_WINDOW = 10,
  WH_PARSE_ERROR = 11,
  WH_IO_ERROR = 12,
  WH_CELL_FAILED = 13,
  WH_INTERNAL_ERROR = 100
};

enum wh_hull_class {
  WH_CLASS_CONVEX = 0,
  WH_CLASS_RCONVEX = 1,
  WH_CLASS_FIXED_NORMAL = 2,
  WH_CLASS_COMPACT = 3,
  WH_CLASS_INTERVAL = 4
};

enum wh_estimate_kind {
  WH_EST_ORACLE = 0,
  WH_EST_DATA_DRIVEN = 1,
  WH_EST_COMPACT_ORACLE = 2,
  WH_EST_NAIVE_HULL_VOLUME = 3,
  WH_EST_PI_OPT = 4,
  WH_EST_PI_NAIVE = 5
};

enum wh_kappa_rule {
  WH_KAPPA_BOUNDARY_SD = 0,
  WH_KAPPA_BOUNDARY_CURRENT = 1,
  WH_KAPPA_BOUNDARY_REFERENCE = 2,
  WH_KAPPA_TOTAL = 3
};

enum wh_experiment {
  WH_EXP_TABLE1 = 0,
  WH_EXP_TABLE2 = 1,
  WH_EXP_PI = 2,
  WH_EXP_EFRON = 3,
  WH_EXP_POLYTOPE = 4,
  WH_EXP_SIMULATE = 5
};

typedef struct wh_points wh_points;
typedef struct wh_hull wh_hull;
typedef struct wh_region wh_region;

typedef struct {
  size_t n_total;
  size_t n_boundary;
  size_t n_interior;
  size_t n_isolated;
} wh_hull_stats;

typedef struct {
  double value;
  double hull_area;
  int kind; /* wh_estimate_kind */
  wh_hull_stats stats;
  int has_lambda;
  double lambda;
} wh_estimate;

typedef struct {
  int hull_class; /* wh_hull_class */
  double radius;  /* r-convex class */
  int normal_count; /* fixed-normal class: evenly spaced normals */
} wh_hull_params;

WH_API const char* wh_version(void);
WH_API const char* wh_last_error(void);
WH_API const char* wh_status_name(int status);
WH_API const char* wh_hull_class_name(int hull_class);
/* Returns -1 for an unknown name. */
WH_API int wh_hull_class_parse(const char* name);
WH_API const char* wh_estimate_kind_name(int kind);

/* window is {x0, x1, y0, y1}, or NULL for the unit square (unit interval
 * when dim is 1; y bounds are then ignored). ys may be NULL when dim is 1. */
WH_API int wh_points_create(int dim, const double* xs, const double* ys, size_t n, const double* window,
                            wh_points** out);
/* Dimension comes from the CSV header. */
WH_API int wh_points_read_csv(const char* path, const double* window, wh_points** out);
WH_API int wh_points_write_csv(const wh_points* points, const char* path);
WH_API size_t wh_points_size(const wh_points* points);
WH_API int wh_points_dim(const wh_points* points);
WH_API int wh_points_get(const wh_points* points, size_t i, double* x, double* y);
WH_API void wh_points_free(wh_points* points);

WH_API int wh_region_named(const char* name, wh_region** out);
WH_API int wh_region_area(const wh_region* region, double* out);
WH_API int wh_region_contains(const wh_region* region, double x, double y, int* out);
WH_API void wh_region_free(wh_region* region);

WH_API int wh_hull_build(const wh_points* points, const wh_hull_params* params, wh_hull** out);
WH_API int wh_hull_area(const wh_hull* hull, double* out);
WH_API int wh_hull_contains(const wh_hull* hull, double x, double y, int* out);
/* Writes the hull geometry text format. */
WH_API int wh_hull_write(const wh_hull* hull, const char* path);
/* Same text into a malloc'ed string released with wh_string_free. */
WH_API int wh_hull_to_text(const wh_hull* hull, char** out);
WH_API void wh_hull_free(wh_hull* hull);

WH_API int wh_classify(const wh_points* points, const wh_hull* hull, wh_hull_stats* out);
WH_API int wh_estimate_data_driven(const wh_points* points, const wh_hull* hull, wh_estimate* out);
WH_API int wh_estimate_oracle(const wh_points* points, const wh_hull* hull, double lambda, wh_estimate* out);
WH_API int wh_estimate_compact_oracle(const wh_points* points, double lambda, wh_estimate* out);
WH_API int wh_estimate_naive(const wh_points* points, const wh_hull* hull, wh_estimate* out);
WH_API int wh_pi_estimates(const wh_points* points_in_square, double* pi_naive, double* pi_opt, int* degenerate);

/* Estimate CSV schema shared with the harness: header line (no newline) and
 * one row for an estimate (malloc'ed, newline-terminated). r is written only
 * for the r-convex class. */
WH_API const char* wh_estimate_csv_header(void);
WH_API int wh_estimate_csv_row(int hull_class, double r, const wh_estimate* est, char** out);

WH_API int wh_sample_ppp(const wh_region* region, double lambda, uint64_t seed, uint64_t stream, wh_points** out);
WH_API int wh_sample_uniform(const wh_region* region, size_t n, uint64_t seed, uint64_t stream, wh_points** out);

/* Lepski radius over the grid r_min + k (r_max - r_min) / k_count, k = 1..k_count. */
WH_API int wh_lepski(const wh_points* points, double r_min, double r_max, int k_count, int kappa_rule, double* r_hat,
                     double* estimate);

typedef struct {
  int experiment; /* wh_experiment */
  const char* region; /* NULL keeps the default */
  int hull_class;
  const double* radii; /* NULL keeps the default grid */
  size_t n_radii;
  int normal_count;
  const double* sizes;
  size_t n_sizes;
  const double* lambdas;
  size_t n_lambdas;
  int replicates;
  uint64_t seed;
  int raster;
  int diagnostics;
  int threads;
  int kappa_rule;
  double lepski_r_min;
  double lepski_r_max;
  int lepski_grid_size;
} wh_experiment_config;

/* Fills the default setup of an experiment; grid pointers are set to NULL. */
WH_API int wh_experiment_config_init(int experiment, wh_experiment_config* cfg);
/* Runs an experiment, writing CSV and manifest files into out_dir. The
 * machine-readable summary is returned in *summary (malloc'ed, may be NULL
 * if not wanted); *passed is 0 when an experiment-level check failed. */
WH_API int wh_run_experiment(const wh_experiment_config* cfg, const char* out_dir, char** summary, int* passed);

WH_API void wh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
