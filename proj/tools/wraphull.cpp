// Command-line driver. Links only the C API.
#include <wraphull/wraphull.h>

#include <CLI11.hpp>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kGeometry = 3, kCellFailed = 4 };

int exit_code(int status) {
  switch (status) {
    case WH_OK:
      return kOk;
    case WH_INVALID_ARGUMENT:
    case WH_EMPTY_SAMPLE:
    case WH_DUPLICATE_POINT:
    case WH_POINT_OUTSIDE_WINDOW:
    case WH_PARSE_ERROR:
    case WH_IO_ERROR:
      return kUsage;
    case WH_BAD_RADIUS:
    case WH_UNBOUNDED_HULL:
    case WH_DEGENERATE_HULL:
    case WH_INCONSISTENT_HULL:
    case WH_ZERO_MEASURE:
      return kGeometry;
    case WH_CELL_FAILED:
      return kCellFailed;
    default:
      return kInternal;
  }
}

struct Failure {
  int code;
  std::string message;
};

void check(int status) {
  if (status != WH_OK)
    throw Failure{exit_code(status), std::string(wh_status_name(status)) + ": " + wh_last_error()};
}

[[noreturn]] void usage_error(const std::string& msg) { throw Failure{kUsage, msg}; }

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      usage_error(std::string("bad number '") + item + "' in " + flag);
    }
  }
  if (out.empty()) usage_error(std::string("empty list in ") + flag);
  return out;
}

struct Range {
  double lo, hi, step;
  int count;
};

// "lo:hi:step" with an integral number of steps.
std::optional<Range> parse_range(const std::string& text) {
  if (text.find(':') == std::string::npos) return std::nullopt;
  std::string t = text;
  for (char& c : t)
    if (c == ':') c = ',';
  const auto v = parse_list(t, "--r-grid");
  if (v.size() != 3 || v[2] <= 0.0 || v[1] < v[0]) usage_error("--r-grid range must be lo:hi:step with lo <= hi, step > 0");
  const double steps = (v[1] - v[0]) / v[2];
  if (std::abs(steps - std::round(steps)) > 1e-6) usage_error("--r-grid step does not divide hi - lo");
  return Range{v[0], v[1], v[2], static_cast<int>(std::lround(steps)) + 1};
}

std::vector<double> expand_grid(const std::string& text) {
  if (auto r = parse_range(text)) {
    std::vector<double> out;
    for (int k = 0; k < r->count; ++k) out.push_back(k + 1 == r->count ? r->hi : r->lo + k * r->step);
    return out;
  }
  return parse_list(text, "--r-grid");
}

struct Options {
  std::string input;
  std::string hull_class;
  std::optional<double> r;
  std::string r_grid;
  std::optional<int> normals;
  std::string lambda;
  std::string n;
  std::optional<int> reps;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<int> raster;
  std::string out = ".";
  std::string hull_out;
  std::string window;
  std::string region;
  std::string kappa;
  bool diagnostics = false;
};

struct Points {
  wh_points* p = nullptr;
  ~Points() { wh_points_free(p); }
};
struct HullHandle {
  wh_hull* h = nullptr;
  ~HullHandle() { wh_hull_free(h); }
};
struct CString {
  char* s = nullptr;
  ~CString() { wh_string_free(s); }
};

int hull_class_of(const Options& o) {
  if (o.hull_class.empty()) usage_error("--class is required");
  const int c = wh_hull_class_parse(o.hull_class.c_str());
  if (c < 0) usage_error("unknown class '" + o.hull_class + "'");
  return c;
}

wh_hull_params hull_params(const Options& o) {
  wh_hull_params p{};
  p.hull_class = hull_class_of(o);
  if (p.hull_class == WH_CLASS_RCONVEX) {
    if (!o.r) usage_error("--r is required for the rconvex class");
    p.radius = *o.r;
  }
  if (p.hull_class == WH_CLASS_FIXED_NORMAL) {
    if (!o.normals) usage_error("--normals is required for the fixed-normal class");
    p.normal_count = *o.normals;
  }
  return p;
}

void load_points(const Options& o, Points& pts) {
  if (o.window.empty()) {
    check(wh_points_read_csv(o.input.c_str(), nullptr, &pts.p));
    return;
  }
  const auto w = parse_list(o.window, "--window");
  if (w.size() != 2 && w.size() != 4) usage_error("--window takes x0,x1 or x0,x1,y0,y1");
  const double win[4] = {w[0], w[1], w.size() == 4 ? w[2] : 0.0, w.size() == 4 ? w[3] : 1.0};
  check(wh_points_read_csv(o.input.c_str(), win, &pts.p));
  if (wh_points_dim(pts.p) == 2 && w.size() != 4) usage_error("--window needs x0,x1,y0,y1 for planar points");
}

void print_row(int cls, double r, const wh_estimate& e) {
  CString row;
  check(wh_estimate_csv_row(cls, r, &e, &row.s));
  std::fputs(row.s, stdout);
}

int cmd_estimate(const Options& o) {
  const wh_hull_params params = hull_params(o);
  std::optional<double> lambda;
  if (!o.lambda.empty()) {
    const auto l = parse_list(o.lambda, "--lambda");
    if (l.size() != 1) usage_error("--lambda takes one value for estimate");
    lambda = l[0];
  }
  Points pts;
  load_points(o, pts);
  HullHandle hull;
  check(wh_hull_build(pts.p, &params, &hull.h));
  if (!o.hull_out.empty()) check(wh_hull_write(hull.h, o.hull_out.c_str()));

  wh_estimate dd{};
  check(wh_estimate_data_driven(pts.p, hull.h, &dd));
  std::printf("%s\n", wh_estimate_csv_header());
  print_row(params.hull_class, params.radius, dd);
  if (lambda) {
    wh_estimate orc{};
    if (params.hull_class == WH_CLASS_COMPACT)
      check(wh_estimate_compact_oracle(pts.p, *lambda, &orc));
    else
      check(wh_estimate_oracle(pts.p, hull.h, *lambda, &orc));
    print_row(params.hull_class, params.radius, orc);
  }
  return kOk;
}

int cmd_hull(const Options& o) {
  const wh_hull_params params = hull_params(o);
  Points pts;
  load_points(o, pts);
  HullHandle hull;
  check(wh_hull_build(pts.p, &params, &hull.h));
  if (!o.hull_out.empty()) {
    check(wh_hull_write(hull.h, o.hull_out.c_str()));
    return kOk;
  }
  CString text;
  check(wh_hull_to_text(hull.h, &text.s));
  std::fputs(text.s, stdout);
  return kOk;
}

int cmd_experiment(int experiment, const char* name, const Options& o) {
  wh_experiment_config cfg{};
  check(wh_experiment_config_init(experiment, &cfg));
  std::vector<double> radii, sizes, lambdas;
  if (!o.region.empty()) cfg.region = o.region.c_str();
  if (!o.hull_class.empty()) cfg.hull_class = hull_class_of(o);
  if (!o.r_grid.empty()) {
    if (experiment == WH_EXP_TABLE2) {
      const auto range = parse_range(o.r_grid);
      if (!range) usage_error("table2 --r-grid must be lo:hi:step");
      if (range->count < 2) usage_error("table2 --r-grid needs at least two radii");
      cfg.lepski_r_min = range->lo - range->step;
      cfg.lepski_r_max = range->hi;
      cfg.lepski_grid_size = range->count;
    } else {
      radii = expand_grid(o.r_grid);
    }
  }
  if (o.r) radii = {*o.r};
  if (!radii.empty()) {
    cfg.radii = radii.data();
    cfg.n_radii = radii.size();
  }
  if (o.normals) cfg.normal_count = *o.normals;
  if (!o.n.empty()) {
    sizes = parse_list(o.n, "--n");
    cfg.sizes = sizes.data();
    cfg.n_sizes = sizes.size();
  }
  if (!o.lambda.empty()) {
    lambdas = parse_list(o.lambda, "--lambda");
    cfg.lambdas = lambdas.data();
    cfg.n_lambdas = lambdas.size();
  }
  if (o.reps) cfg.replicates = *o.reps;
  if (o.seed) cfg.seed = *o.seed;
  if (const char* env = std::getenv("WRAPHULL_SEED"); env && *env) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long s = std::strtoull(env, &end, 10);
    if (*end != '\0' || errno != 0 || env[0] == '-') usage_error(std::string("bad WRAPHULL_SEED '") + env + "'");
    cfg.seed = s;
  }
  if (o.threads) cfg.threads = *o.threads;
  if (o.raster) cfg.raster = *o.raster;
  cfg.diagnostics = o.diagnostics ? 1 : 0;
  if (!o.kappa.empty()) {
    static const char* names[] = {"boundary-sd", "boundary-current", "boundary-reference", "total"};
    int rule = -1;
    for (int i = 0; i < 4; ++i)
      if (o.kappa == names[i]) rule = i;
    if (rule < 0) usage_error("unknown --kappa '" + o.kappa + "'");
    cfg.kappa_rule = rule;
  }

  std::fprintf(stderr, "wraphull %s: running %s (reps=%d, seed=%llu) into %s\n", wh_version(), name,
               cfg.replicates, static_cast<unsigned long long>(cfg.seed), o.out.c_str());
  CString summary;
  int passed = 0;
  check(wh_run_experiment(&cfg, o.out.c_str(), &summary.s, &passed));
  std::fputs(summary.s, stdout);
  std::fprintf(stderr, "wraphull: %s done%s\n", name, passed ? "" : ", check FAILED");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Volume estimation with wrapping hulls"};
  app.require_subcommand(1, 1);
  Options o;

  auto positional = [&](CLI::App* c) { c->add_option("input", o.input, "Points CSV (header x,y or x)")->required(); };
  auto hull_flags = [&](CLI::App* c) {
    c->add_option("--class", o.hull_class, "convex|rconvex|fixed-normal|compact|interval")->required();
    c->add_option("--r", o.r, "Radius of the r-convex class");
    c->add_option("--normals", o.normals, "Number of evenly spaced normals");
    c->add_option("--window", o.window, "Observation window x0,x1[,y0,y1] (default unit cube)");
    c->add_option("--hull-out", o.hull_out, "Write hull geometry text here");
  };
  auto run_flags = [&](CLI::App* c) {
    c->add_option("--reps", o.reps, "Monte Carlo replicates per cell");
    c->add_option("--seed", o.seed, "Master seed (WRAPHULL_SEED overrides)");
    c->add_option("--threads", o.threads, "Worker cap, 0 = all cores");
    c->add_option("--out", o.out, "Output directory");
    c->add_option("--region", o.region, "Named region");
  };

  auto* estimate = app.add_subcommand("estimate", "Estimate the volume from a points file");
  positional(estimate);
  hull_flags(estimate);
  estimate->add_option("--lambda", o.lambda, "Known intensity, adds the oracle estimate");

  auto* hull = app.add_subcommand("hull", "Write the wrapping hull of a points file");
  positional(hull);
  hull_flags(hull);

  auto* table1 = app.add_subcommand("table1", "Oracle and data-driven RMSE over (r, n)");
  run_flags(table1);
  table1->add_option("--class", o.hull_class, "Hull class");
  table1->add_option("--r-grid", o.r_grid, "Radii, comma list or lo:hi:step");
  table1->add_option("--n", o.n, "Expected sample sizes, comma list");
  table1->add_option("--raster", o.raster, "Raster resolution for diagnostics");
  table1->add_flag("--diagnostics", o.diagnostics, "Also write rasterized missing-volume terms");

  auto* table2 = app.add_subcommand("table2", "Lepski-adaptive radius selection");
  run_flags(table2);
  table2->add_option("--r-grid", o.r_grid, "Radius grid lo:hi:step");
  table2->add_option("--n", o.n, "Expected sample sizes, comma list");
  table2->add_option("--kappa", o.kappa, "boundary-sd|boundary-current|boundary-reference|total");

  auto* pi = app.add_subcommand("pi", "Rates of the two pi estimators");
  run_flags(pi);
  pi->add_option("--n", o.n, "Sample sizes N, comma list");

  auto* efron = app.add_subcommand("efron", "Efron identity and oracle risk check");
  run_flags(efron);
  efron->add_option("--lambda", o.lambda, "Intensity");
  efron->add_option("--raster", o.raster, "Raster resolution for the missing volume");

  auto* poly = app.add_subcommand("polytope-rate", "Fixed-normal hull rate");
  run_flags(poly);
  poly->add_option("--normals", o.normals, "Number of evenly spaced normals k");
  poly->add_option("--lambda", o.lambda, "Intensities, comma list");

  auto* sim = app.add_subcommand("simulate", "One sample, its hull and estimates");
  run_flags(sim);
  sim->add_option("--class", o.hull_class, "Hull class");
  sim->add_option("--r", o.r, "Radius of the r-convex class");
  sim->add_option("--normals", o.normals, "Number of evenly spaced normals");
  sim->add_option("--lambda", o.lambda, "Intensity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*estimate) return cmd_estimate(o);
    if (*hull) return cmd_hull(o);
    if (*table1) return cmd_experiment(WH_EXP_TABLE1, "table1", o);
    if (*table2) return cmd_experiment(WH_EXP_TABLE2, "table2", o);
    if (*pi) return cmd_experiment(WH_EXP_PI, "pi", o);
    if (*efron) return cmd_experiment(WH_EXP_EFRON, "efron", o);
    if (*poly) return cmd_experiment(WH_EXP_POLYTOPE, "polytope-rate", o);
    if (*sim) return cmd_experiment(WH_EXP_SIMULATE, "simulate", o);
  } catch (const Failure& f) {
    std::fprintf(stderr, "wraphull: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "wraphull: %s\n", e.what());
    return kInternal;
  }
  return kInternal;
}
