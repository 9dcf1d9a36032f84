#include "wraphull/wraphull.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "wraphull/error.hpp"
#include "wraphull/estimators.hpp"
#include "wraphull/harness.hpp"
#include "wraphull/hulls.hpp"
#include "wraphull/io.hpp"
#include "wraphull/region.hpp"
#include "wraphull/sampling.hpp"

struct wh_points {
  wraphull::PointSet value;
};
struct wh_hull {
  wraphull::Hull value;
};
struct wh_region {
  wraphull::Region value;
};

namespace {

thread_local std::string last_error;

int fail(int code, const char* what) {
  last_error = what;
  return code;
}

template <class F>
int guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return WH_OK;
  } catch (const wraphull::Error& e) {
    return fail(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WH_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(WH_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(WH_INTERNAL_ERROR, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw wraphull::Error(wraphull::ErrorCode::InvalidArgument, what);
}

wraphull::Window window_from(int dim, const double* w) {
  if (!w) return wraphull::Window::unit(dim);
  if (dim == 1) return wraphull::Window(1, {w[0], 0.0}, {w[1], 0.0});
  return wraphull::Window(2, {w[0], w[2]}, {w[1], w[3]});
}

wh_hull_stats to_c(const wraphull::HullStats& s) { return {s.n_total, s.n_boundary, s.n_interior, s.n_isolated}; }

void to_c(const wraphull::VolumeEstimate& e, wh_estimate* out) {
  out->value = e.value;
  out->hull_area = e.hull_area;
  out->kind = static_cast<int>(e.kind);
  out->stats = to_c(e.stats);
  out->has_lambda = e.lambda.has_value();
  out->lambda = e.lambda.value_or(0.0);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::vector<double> grid(const double* p, std::size_t n, const std::vector<double>& fallback) {
  return p ? std::vector<double>(p, p + n) : fallback;
}

}  // namespace

extern "C" {

const char* wh_version(void) { return "1.0.0"; }

const char* wh_last_error(void) { return last_error.c_str(); }

const char* wh_status_name(int status) {
  if (status == WH_INTERNAL_ERROR) return "InternalError";
  if (status < 0 || status > WH_CELL_FAILED) return "Unknown";
  return wraphull::error_code_name(static_cast<wraphull::ErrorCode>(status));
}

const char* wh_hull_class_name(int hull_class) {
  if (hull_class < WH_CLASS_CONVEX || hull_class > WH_CLASS_INTERVAL) return "unknown";
  return wraphull::hull_class_name(static_cast<wraphull::HullClass>(hull_class));
}

int wh_hull_class_parse(const char* name) {
  if (!name) return -1;
  const auto c = wraphull::parse_hull_class(name);
  return c ? static_cast<int>(*c) : -1;
}

const char* wh_estimate_kind_name(int kind) {
  if (kind < WH_EST_ORACLE || kind > WH_EST_PI_NAIVE) return "unknown";
  return wraphull::estimate_kind_name(static_cast<wraphull::EstimateKind>(kind));
}

int wh_points_create(int dim, const double* xs, const double* ys, size_t n, const double* window, wh_points** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(dim == 1 || dim == 2, "dimension must be 1 or 2");
    require(n == 0 || xs != nullptr, "null x coordinates");
    require(dim == 1 || n == 0 || ys != nullptr, "null y coordinates");
    std::vector<wraphull::Point> pts(n);
    for (size_t i = 0; i < n; ++i) pts[i] = {xs[i], dim == 2 ? ys[i] : 0.0};
    *out = new wh_points{wraphull::PointSet(std::move(pts), window_from(dim, window))};
  });
}

int wh_points_read_csv(const char* path, const double* window, wh_points** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::ifstream in(path);
    if (!in) throw wraphull::Error(wraphull::ErrorCode::IoError, std::string("cannot open ") + path);
    if (!window) {
      *out = new wh_points{wraphull::read_points_csv(in)};
      return;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string first;
    std::istringstream probe(buf.str());
    while (std::getline(probe, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
    }
    const int dim = first.find(',') == std::string::npos ? 1 : 2;
    *out = new wh_points{wraphull::read_points_csv(buf, window_from(dim, window))};
  });
}

int wh_points_write_csv(const wh_points* points, const char* path) {
  return guarded([&] {
    require(points && path, "null argument");
    std::ofstream f(path);
    if (!f) throw wraphull::Error(wraphull::ErrorCode::IoError, std::string("cannot write ") + path);
    wraphull::write_points_csv(f, points->value);
  });
}

size_t wh_points_size(const wh_points* points) { return points ? points->value.size() : 0; }

int wh_points_dim(const wh_points* points) { return points ? points->value.dim() : 0; }

int wh_points_get(const wh_points* points, size_t i, double* x, double* y) {
  return guarded([&] {
    require(points != nullptr, "null points");
    require(i < points->value.size(), "point index out of range");
    if (x) *x = points->value[i].x;
    if (y) *y = points->value[i].y;
  });
}

void wh_points_free(wh_points* points) { delete points; }

int wh_region_named(const char* name, wh_region** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new wh_region{wraphull::Region::named(name)};
  });
}

int wh_region_area(const wh_region* region, double* out) {
  return guarded([&] {
    require(region && out, "null argument");
    *out = region->value.exact_area();
  });
}

int wh_region_contains(const wh_region* region, double x, double y, int* out) {
  return guarded([&] {
    require(region && out, "null argument");
    *out = region->value.contains({x, y}) ? 1 : 0;
  });
}

void wh_region_free(wh_region* region) { delete region; }

int wh_hull_build(const wh_points* points, const wh_hull_params* params, wh_hull** out) {
  return guarded([&] {
    require(points && params && out, "null argument");
    require(params->hull_class >= WH_CLASS_CONVEX && params->hull_class <= WH_CLASS_INTERVAL, "unknown hull class");
    wraphull::HullParams p;
    p.cls = static_cast<wraphull::HullClass>(params->hull_class);
    p.radius = params->radius;
    p.normal_count = params->normal_count;
    *out = new wh_hull{wraphull::build_hull(points->value, p)};
  });
}

int wh_hull_area(const wh_hull* hull, double* out) {
  return guarded([&] {
    require(hull && out, "null argument");
    *out = wraphull::area(hull->value);
  });
}

int wh_hull_contains(const wh_hull* hull, double x, double y, int* out) {
  return guarded([&] {
    require(hull && out, "null argument");
    *out = wraphull::contains(hull->value, {x, y}) ? 1 : 0;
  });
}

int wh_hull_write(const wh_hull* hull, const char* path) {
  return guarded([&] {
    require(hull && path, "null argument");
    std::ofstream f(path);
    if (!f) throw wraphull::Error(wraphull::ErrorCode::IoError, std::string("cannot write ") + path);
    wraphull::write_hull_text(f, hull->value);
  });
}

int wh_hull_to_text(const wh_hull* hull, char** out) {
  return guarded([&] {
    require(hull && out, "null argument");
    std::ostringstream os;
    wraphull::write_hull_text(os, hull->value);
    *out = dup_string(os.str());
  });
}

void wh_hull_free(wh_hull* hull) { delete hull; }

int wh_classify(const wh_points* points, const wh_hull* hull, wh_hull_stats* out) {
  return guarded([&] {
    require(points && hull && out, "null argument");
    *out = to_c(wraphull::classify(points->value, hull->value));
  });
}

int wh_estimate_data_driven(const wh_points* points, const wh_hull* hull, wh_estimate* out) {
  return guarded([&] {
    require(points && hull && out, "null argument");
    const auto st = wraphull::classify(points->value, hull->value);
    to_c(wraphull::data_driven_estimate(st, wraphull::area(hull->value)), out);
  });
}

int wh_estimate_oracle(const wh_points* points, const wh_hull* hull, double lambda, wh_estimate* out) {
  return guarded([&] {
    require(points && hull && out, "null argument");
    const auto st = wraphull::classify(points->value, hull->value);
    to_c(wraphull::oracle_estimate(st, wraphull::area(hull->value), lambda), out);
  });
}

int wh_estimate_compact_oracle(const wh_points* points, double lambda, wh_estimate* out) {
  return guarded([&] {
    require(points && out, "null argument");
    to_c(wraphull::compact_oracle_estimate(points->value.size(), lambda), out);
  });
}

int wh_estimate_naive(const wh_points* points, const wh_hull* hull, wh_estimate* out) {
  return guarded([&] {
    require(points && hull && out, "null argument");
    const auto st = wraphull::classify(points->value, hull->value);
    to_c(wraphull::naive_hull_volume(st, wraphull::area(hull->value)), out);
  });
}

int wh_pi_estimates(const wh_points* points_in_square, double* pi_naive, double* pi_opt, int* degenerate) {
  return guarded([&] {
    require(points_in_square != nullptr, "null points");
    const auto e = wraphull::pi_estimators(points_in_square->value);
    if (pi_naive) *pi_naive = e.pi_naive;
    if (pi_opt) *pi_opt = e.pi_opt;
    if (degenerate) *degenerate = e.degenerate ? 1 : 0;
  });
}

const char* wh_estimate_csv_header(void) { return wraphull::kEstimateCsvHeader; }

int wh_estimate_csv_row(int hull_class, double r, const wh_estimate* est, char** out) {
  return guarded([&] {
    require(est && out, "null argument");
    require(hull_class >= WH_CLASS_CONVEX && hull_class <= WH_CLASS_INTERVAL, "unknown hull class");
    require(est->kind >= WH_EST_ORACLE && est->kind <= WH_EST_PI_NAIVE, "unknown estimate kind");
    wraphull::VolumeEstimate e;
    e.value = est->value;
    e.hull_area = est->hull_area;
    e.kind = static_cast<wraphull::EstimateKind>(est->kind);
    e.stats = {est->stats.n_total, est->stats.n_boundary, est->stats.n_interior, est->stats.n_isolated};
    if (est->has_lambda) e.lambda = est->lambda;
    std::ostringstream os;
    wraphull::write_estimate_row(os, static_cast<wraphull::HullClass>(hull_class), r, e);
    *out = dup_string(os.str());
  });
}

int wh_sample_ppp(const wh_region* region, double lambda, uint64_t seed, uint64_t stream, wh_points** out) {
  return guarded([&] {
    require(region && out, "null argument");
    *out = new wh_points{wraphull::sample_ppp(region->value, lambda, {seed, stream}).points};
  });
}

int wh_sample_uniform(const wh_region* region, size_t n, uint64_t seed, uint64_t stream, wh_points** out) {
  return guarded([&] {
    require(region && out, "null argument");
    *out = new wh_points{wraphull::sample_uniform_n(region->value, n, {seed, stream})};
  });
}

int wh_lepski(const wh_points* points, double r_min, double r_max, int k_count, int kappa_rule, double* r_hat,
              double* estimate) {
  return guarded([&] {
    require(points != nullptr, "null points");
    require(kappa_rule >= WH_KAPPA_BOUNDARY_SD && kappa_rule <= WH_KAPPA_TOTAL, "unknown kappa rule");
    wraphull::LepskiConfig cfg{r_min, r_max, k_count, static_cast<wraphull::KappaRule>(kappa_rule)};
    const auto res = wraphull::lepski_select(points->value, cfg);
    if (r_hat) *r_hat = res.r_hat;
    if (estimate) *estimate = res.estimate;
  });
}

int wh_experiment_config_init(int experiment, wh_experiment_config* cfg) {
  return guarded([&] {
    require(cfg != nullptr, "null config");
    require(experiment >= WH_EXP_TABLE1 && experiment <= WH_EXP_SIMULATE, "unknown experiment");
    const auto d = wraphull::ExperimentConfig::defaults(static_cast<wraphull::Experiment>(experiment));
    *cfg = wh_experiment_config{};
    cfg->experiment = experiment;
    cfg->region = nullptr;
    cfg->hull_class = static_cast<int>(d.hull_class);
    cfg->normal_count = d.normal_count;
    cfg->replicates = d.replicates;
    cfg->seed = d.seed;
    cfg->raster = d.raster;
    cfg->diagnostics = d.diagnostics ? 1 : 0;
    cfg->threads = d.threads;
    cfg->kappa_rule = static_cast<int>(d.lepski.kappa_rule);
    cfg->lepski_r_min = d.lepski.r_min;
    cfg->lepski_r_max = d.lepski.r_max;
    cfg->lepski_grid_size = d.lepski.grid_size;
  });
}

int wh_run_experiment(const wh_experiment_config* cfg, const char* out_dir, char** summary, int* passed) {
  return guarded([&] {
    require(cfg != nullptr, "null config");
    require(cfg->experiment >= WH_EXP_TABLE1 && cfg->experiment <= WH_EXP_SIMULATE, "unknown experiment");
    require(cfg->hull_class >= WH_CLASS_CONVEX && cfg->hull_class <= WH_CLASS_INTERVAL, "unknown hull class");
    require(cfg->kappa_rule >= WH_KAPPA_BOUNDARY_SD && cfg->kappa_rule <= WH_KAPPA_TOTAL, "unknown kappa rule");
    auto c = wraphull::ExperimentConfig::defaults(static_cast<wraphull::Experiment>(cfg->experiment));
    if (cfg->region) c.region = cfg->region;
    c.hull_class = static_cast<wraphull::HullClass>(cfg->hull_class);
    c.radii = grid(cfg->radii, cfg->n_radii, c.radii);
    c.sizes = grid(cfg->sizes, cfg->n_sizes, c.sizes);
    c.lambdas = grid(cfg->lambdas, cfg->n_lambdas, c.lambdas);
    c.normal_count = cfg->normal_count;
    c.replicates = cfg->replicates;
    c.seed = cfg->seed;
    c.raster = cfg->raster;
    c.diagnostics = cfg->diagnostics != 0;
    c.threads = cfg->threads;
    c.lepski = {cfg->lepski_r_min, cfg->lepski_r_max, cfg->lepski_grid_size,
                static_cast<wraphull::KappaRule>(cfg->kappa_rule)};
    std::ostringstream os;
    const bool ok = wraphull::run_experiment(c, out_dir ? out_dir : ".", os);
    if (passed) *passed = ok ? 1 : 0;
    if (summary) *summary = dup_string(os.str());
  });
}

void wh_string_free(char* s) { std::free(s); }

}  // extern "C"
