#include "wraphull/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "wraphull/delaunay.hpp"
#include "wraphull/error.hpp"
#include "wraphull/io.hpp"
#include "wraphull/predicates.hpp"
#include "replicates.hpp"

namespace wraphull {

namespace {

using detail::parallel_for;
using detail::Replicates;

std::uint64_t cell_key(Experiment e, std::size_t cell) { return (static_cast<std::uint64_t>(e) + 1) << 32 | cell; }

RngConfig rng_for(const ExperimentConfig& cfg, std::size_t cell, std::size_t rep) {
  return {cfg.seed, substream_id(cell_key(cfg.experiment, cell), rep)};
}

void check_grid(const std::vector<double>& g, const char* what, bool require_nonempty = true) {
  if (g.empty()) {
    if (require_nonempty) throw Error(ErrorCode::InvalidArgument, std::string(what) + " grid is empty");
    return;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::isfinite(g[i]) || !(g[i] > 0.0))
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " grid values must be finite and positive");
    if (i > 0 && !(g[i] > g[i - 1]))
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " grid must be strictly increasing");
  }
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += format_double(v[i]);
  }
  return s;
}

std::string cell_name(const char* what, double a, double b = std::nan("")) {
  std::ostringstream os;
  os << what << " cell (" << a;
  if (!std::isnan(b)) os << ", " << b;
  os << ")";
  return os.str();
}

// Convex hull statistics that tolerate an empty sample.
std::pair<HullStats, double> convex_stats(const PointSet& points) {
  if (points.empty()) return {HullStats{}, 0.0};
  const ConvexPolygon hull = convex_hull(points);
  return {classify(points, hull), hull.area()};
}

bool in_triangle_raw(const std::array<Point, 3>& t, Point p) {
  return orient_det(t[0], t[1], p) >= 0.0 && orient_det(t[1], t[2], p) >= 0.0 && orient_det(t[2], t[0], p) >= 0.0;
}

}  // namespace

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Table1: return "table1";
    case Experiment::Table2Adaptive: return "table2";
    case Experiment::PiRates: return "pi";
    case Experiment::EfronCheck: return "efron";
    case Experiment::PolytopeRate: return "polytope";
    case Experiment::SingleRun: return "simulate";
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(const std::string& name) {
  for (Experiment e : {Experiment::Table1, Experiment::Table2Adaptive, Experiment::PiRates, Experiment::EfronCheck,
                       Experiment::PolytopeRate, Experiment::SingleRun}) {
    if (name == experiment_name(e)) return e;
  }
  if (name == "polytope-rate") return Experiment::PolytopeRate;
  return std::nullopt;
}

ExperimentConfig ExperimentConfig::defaults(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  switch (e) {
    case Experiment::Table1:
      c.radii = {0.04, 0.1, 0.25, 0.3};
      c.sizes = {50, 100, 200, 300, 400};
      break;
    case Experiment::Table2Adaptive:
      c.sizes = {50, 100, 200, 300, 400, 500, 1000};
      break;
    case Experiment::PiRates:
      c.region = "square";
      c.hull_class = HullClass::Convex;
      c.sizes = {500, 1000, 2000, 4000, 8000};
      break;
    case Experiment::EfronCheck:
      c.region = "disk";
      c.hull_class = HullClass::Convex;
      c.lambdas = {200};
      c.replicates = 2000;
      break;
    case Experiment::PolytopeRate:
      c.region = "box";
      c.hull_class = HullClass::FixedNormal;
      c.normal_count = 4;
      c.lambdas = {250, 500, 1000, 2000};
      c.replicates = 500;
      break;
    case Experiment::SingleRun:
      c.region = "fig1";
      c.radii = {0.25};
      c.lambdas = {300};
      c.replicates = 1;
      break;
  }
  return c;
}

void ExperimentConfig::validate() const {
  if (replicates < 1) throw Error(ErrorCode::InvalidArgument, "replicates must be at least 1");
  if (raster < 2) throw Error(ErrorCode::InvalidArgument, "raster resolution must be at least 2");
  const int dim = Region::named(region).dim();
  const bool planar = experiment != Experiment::SingleRun && experiment != Experiment::PiRates;
  if (planar && dim != 2)
    throw Error(ErrorCode::InvalidArgument, std::string(experiment_name(experiment)) + " needs a planar region");
  if (experiment == Experiment::SingleRun && (dim == 1) != (hull_class == HullClass::Interval))
    throw Error(ErrorCode::InvalidArgument, "the interval class goes with one-dimensional regions only");
  switch (experiment) {
    case Experiment::Table1:
      check_grid(radii, "radius");
      check_grid(sizes, "n");
      break;
    case Experiment::Table2Adaptive:
      check_grid(sizes, "n");
      lepski.validate();
      break;
    case Experiment::PiRates:
      check_grid(sizes, "N");
      if (sizes.size() < 2) throw Error(ErrorCode::InvalidArgument, "pi rates need at least two sample sizes");
      for (double n : sizes) {
        if (n != std::floor(n)) throw Error(ErrorCode::InvalidArgument, "pi sample sizes must be integers");
      }
      break;
    case Experiment::EfronCheck:
      check_grid(lambdas, "lambda");
      break;
    case Experiment::PolytopeRate:
      check_grid(lambdas, "lambda");
      if (normal_count < 3) throw Error(ErrorCode::InvalidArgument, "polytope rate needs at least 3 normals");
      break;
    case Experiment::SingleRun:
      check_grid(lambdas, "lambda");
      if (hull_class == HullClass::RConvex) check_grid(radii, "radius");
      break;
  }
}

RasterVolumes raster_volumes(const Region& region, const Hull& hull, int res) {
  if (res < 2) throw Error(ErrorCode::InvalidArgument, "raster resolution must be at least 2");
  const Window& w = region.window();
  const bool one_d = region.dim() == 1;
  const int ny = one_d ? 1 : res;
  const double dx = w.extent(0) / res;
  const double dy = one_d ? 1.0 : w.extent(1) / res;
  auto center = [&](int i, int j) {
    return Point{w.lo(0) + (i + 0.5) * dx, one_d ? 0.0 : w.lo(1) + (j + 0.5) * dy};
  };

  std::vector<char> in_hull(static_cast<std::size_t>(res) * ny, 0);
  if (const auto* arc = std::get_if<ArcPolygon>(&hull)) {
    // Scan each kept triangle's pixels, then remove those in empty balls.
    const double r2 = arc->radius * arc->radius;
    for (const auto& t : arc->cells) {
      const double x0 = std::min({t[0].x, t[1].x, t[2].x}), x1 = std::max({t[0].x, t[1].x, t[2].x});
      const double y0 = std::min({t[0].y, t[1].y, t[2].y}), y1 = std::max({t[0].y, t[1].y, t[2].y});
      const int i0 = std::max(0, static_cast<int>(std::floor((x0 - w.lo(0)) / dx - 0.5)));
      const int i1 = std::min(res - 1, static_cast<int>(std::ceil((x1 - w.lo(0)) / dx - 0.5)));
      const int j0 = std::max(0, static_cast<int>(std::floor((y0 - w.lo(1)) / dy - 0.5)));
      const int j1 = std::min(ny - 1, static_cast<int>(std::ceil((y1 - w.lo(1)) / dy - 0.5)));
      for (int i = i0; i <= i1; ++i) {
        for (int j = j0; j <= j1; ++j) {
          if (in_triangle_raw(t, center(i, j))) in_hull[static_cast<std::size_t>(i) * ny + j] = 1;
        }
      }
    }
    for (const Point& c : arc->empty_ball_centers) {
      const int i0 = std::max(0, static_cast<int>(std::floor((c.x - arc->radius - w.lo(0)) / dx - 0.5)));
      const int i1 = std::min(res - 1, static_cast<int>(std::ceil((c.x + arc->radius - w.lo(0)) / dx - 0.5)));
      const int j0 = std::max(0, static_cast<int>(std::floor((c.y - arc->radius - w.lo(1)) / dy - 0.5)));
      const int j1 = std::min(ny - 1, static_cast<int>(std::ceil((c.y + arc->radius - w.lo(1)) / dy - 0.5)));
      for (int i = i0; i <= i1; ++i) {
        for (int j = j0; j <= j1; ++j) {
          if (norm2(center(i, j) - c) < r2) in_hull[static_cast<std::size_t>(i) * ny + j] = 0;
        }
      }
    }
  } else {
    for (int i = 0; i < res; ++i) {
      for (int j = 0; j < ny; ++j) in_hull[static_cast<std::size_t>(i) * ny + j] = contains(hull, center(i, j));
    }
  }

  std::size_t missing = 0, excess = 0;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < ny; ++j) {
      const bool h = in_hull[static_cast<std::size_t>(i) * ny + j];
      const bool a = region.contains(center(i, j));
      missing += a && !h;
      excess += h && !a;
    }
  }
  const double cell = one_d ? dx : dx * dy;
  return {missing * cell, excess * cell};
}

std::vector<McRow> run_table1(const ExperimentConfig& cfg) {
  cfg.validate();
  const Region region = Region::named(cfg.region);
  const double truth = region.exact_area();
  const std::size_t nr = cfg.radii.size();

  struct Rep {
    std::vector<HullStats> stats;
    std::vector<double> oracle, data_driven, missing, excess;
  };
  std::vector<McRow> rows;
  for (std::size_t ni = 0; ni < cfg.sizes.size(); ++ni) {
    const double n = cfg.sizes[ni];
    const double lambda = n / truth;
    // One sample per replicate serves every radius of the row.
    Replicates<Rep> reps(static_cast<std::size_t>(cfg.replicates));
    reps.run(cfg.threads, [&](std::size_t m) {
      const PppSample s = sample_ppp(region, lambda, rng_for(cfg, ni, m));
      Rep rep;
      const DelaunayTriangulation dt = delaunay(s.points.points());
      for (double r : cfg.radii) {
        const Hull hull = r_convex_hull(dt, r);
        const HullStats st = classify(s.points, hull);
        const double a = area(hull);
        rep.stats.push_back(st);
        rep.oracle.push_back(oracle_estimate(st, a, lambda).value);
        rep.data_driven.push_back(data_driven_estimate(st, a).value);
        if (cfg.diagnostics) {
          const RasterVolumes rv = raster_volumes(region, hull, cfg.raster);
          rep.missing.push_back(rv.missing);
          rep.excess.push_back(rv.excess);
        }
      }
      return rep;
    });
    const std::size_t failures = reps.check(cell_name("table1 n", n));
    for (std::size_t ri = 0; ri < nr; ++ri) {
      McRow row;
      row.r = cfg.radii[ri];
      row.n = n;
      row.lambda = lambda;
      row.failures = failures;
      auto count = [&](auto field) {
        const auto v = reps.column([&](const Rep& r) { return static_cast<double>(r.stats[ri].*field); });
        return aggregate(v, 0.0);
      };
      row.n_total = count(&HullStats::n_total);
      row.n_interior = count(&HullStats::n_interior);
      row.n_boundary = count(&HullStats::n_boundary);
      row.n_isolated = count(&HullStats::n_isolated);
      row.oracle = aggregate(reps.column([&](const Rep& r) { return r.oracle[ri]; }), truth);
      row.data_driven = aggregate(reps.column([&](const Rep& r) { return r.data_driven[ri]; }), truth);
      row.ratio = row.oracle.rmse > 0.0 ? row.data_driven.rmse / row.oracle.rmse : 0.0;
      if (cfg.diagnostics) {
        const auto miss = reps.column([&](const Rep& r) { return r.missing[ri]; });
        const auto exc = reps.column([&](const Rep& r) { return r.excess[ri]; });
        OracleDiagnostics d;
        const Aggregate am = aggregate(miss, 0.0);
        d.mean_missing = am.mean;
        d.var_missing = am.sd * am.sd;
        d.mean_excess = aggregate(exc, 0.0).mean;
        d.alpha = d.mean_missing > 0.0 ? (d.var_missing / d.mean_missing + d.mean_missing) / truth : 0.0;
        double nb4 = 0.0, big = 0.0;
        std::size_t j = 0;
        for (const auto& s : reps.slots) {
          if (!s) continue;
          nb4 += std::pow(static_cast<double>(s->stats[ri].n_boundary), 4.0);
          big += miss[j++] >= truth / 2.0 ? 1.0 : 0.0;
        }
        const double m = static_cast<double>(miss.size());
        d.r_term = std::pow(nb4 / m, 0.25) * std::pow(big / m, 0.25) / lambda;
        row.diagnostics = d;
      }
      rows.push_back(row);
    }
  }
  // Rows ordered by r, then n.
  std::stable_sort(rows.begin(), rows.end(), [](const McRow& a, const McRow& b) { return a.r < b.r; });
  return rows;
}

std::vector<AdaptiveRow> run_table2_adaptive(const ExperimentConfig& cfg) {
  cfg.validate();
  const Region region = Region::named(cfg.region);
  const double truth = region.exact_area();
  std::vector<AdaptiveRow> rows;
  for (std::size_t ni = 0; ni < cfg.sizes.size(); ++ni) {
    const double n = cfg.sizes[ni];
    const double lambda = n / truth;
    Replicates<std::pair<double, double>> reps(static_cast<std::size_t>(cfg.replicates));
    reps.run(cfg.threads, [&](std::size_t m) {
      const PppSample s = sample_ppp(region, lambda, rng_for(cfg, ni, m));
      const LepskiResult res = lepski_select(s.points, cfg.lepski);
      return std::pair{res.r_hat, res.estimate};
    });
    AdaptiveRow row;
    row.n = n;
    row.failures = reps.check(cell_name("table2 n", n));
    row.r_hat = aggregate(reps.column([](const auto& p) { return p.first; }), 0.0);
    row.estimate = aggregate(reps.column([](const auto& p) { return p.second; }), truth);
    rows.push_back(row);
  }
  return rows;
}

PiResult run_pi_rates(const ExperimentConfig& cfg) {
  cfg.validate();
  PiResult result;
  const double pi = std::numbers::pi;
  for (std::size_t ni = 0; ni < cfg.sizes.size(); ++ni) {
    const auto n = static_cast<std::size_t>(cfg.sizes[ni]);
    Replicates<PiEstimates> reps(static_cast<std::size_t>(cfg.replicates));
    reps.run(cfg.threads, [&](std::size_t m) {
      return pi_estimators(sample_window(Window::unit(2), n, rng_for(cfg, ni, m)));
    });
    reps.check(cell_name("pi N", cfg.sizes[ni]));
    PiRow row;
    row.n = cfg.sizes[ni];
    row.naive = aggregate(reps.column([](const PiEstimates& e) { return e.pi_naive; }), pi);
    row.opt = aggregate(reps.column([](const PiEstimates& e) { return e.pi_opt; }), pi);
    row.degenerate = static_cast<std::size_t>(
        std::count_if(reps.slots.begin(), reps.slots.end(), [](const auto& s) { return s && s->degenerate; }));
    result.rows.push_back(row);
  }
  std::vector<double> x, yn, yo;
  for (const PiRow& r : result.rows) {
    x.push_back(r.n);
    yn.push_back(r.naive.rmse);
    yo.push_back(r.opt.rmse);
  }
  result.naive = fit_rate(x, yn);
  result.opt = fit_rate(x, yo);
  return result;
}

EfronReport run_efron_check(const ExperimentConfig& cfg) {
  cfg.validate();
  const Region region = Region::named(cfg.region);
  const double truth = region.exact_area();
  const double lambda = cfg.lambdas.front();
  struct Rep {
    double n_boundary, missing, oracle;
  };
  Replicates<Rep> reps(static_cast<std::size_t>(cfg.replicates));
  reps.run(cfg.threads, [&](std::size_t m) {
    const PppSample s = sample_ppp(region, lambda, rng_for(cfg, 0, m));
    const auto [st, a] = convex_stats(s.points);
    return Rep{static_cast<double>(st.n_boundary), truth - a, oracle_estimate(st, a, lambda).value};
  });
  EfronReport rep;
  rep.lambda = lambda;
  rep.area = truth;
  rep.failures = reps.check(cell_name("efron lambda", lambda));
  const auto nb = reps.column([](const Rep& r) { return r.n_boundary; });
  const auto miss = reps.column([](const Rep& r) { return r.missing; });
  const auto orc = reps.column([](const Rep& r) { return r.oracle; });
  rep.replicates = nb.size();
  rep.n_boundary = aggregate(nb, 0.0);
  rep.missing = aggregate(miss, 0.0);
  rep.oracle = aggregate(orc, truth);
  rep.lambda_mean_missing = lambda * rep.missing.mean;
  rep.defined = rep.replicates >= 2;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (!rep.defined) {
    rep.z = rep.z_paired = rep.z_unbiased = rep.z_risk = rep.var_oracle_lambda_se = nan;
    rep.var_oracle_lambda = nan;
    return rep;
  }
  const double diff = rep.n_boundary.mean - rep.lambda_mean_missing;
  const double se = std::hypot(rep.n_boundary.se, lambda * rep.missing.se);
  rep.z = se > 0.0 ? diff / se : (diff == 0.0 ? 0.0 : nan);
  std::vector<double> d(nb.size());
  for (std::size_t i = 0; i < nb.size(); ++i) d[i] = nb[i] - lambda * miss[i];
  const Aggregate ad = aggregate(d, 0.0);
  rep.z_paired = ad.se > 0.0 ? ad.mean / ad.se : nan;
  rep.z_unbiased = rep.oracle.se > 0.0 ? (rep.oracle.mean - truth) / rep.oracle.se : nan;
  const VarianceEstimate v = sample_variance(orc);
  rep.var_oracle_lambda = v.variance * lambda;
  rep.var_oracle_lambda_se = v.se * lambda;
  const double se_risk = std::hypot(rep.var_oracle_lambda_se, rep.missing.se);
  rep.z_risk = se_risk > 0.0 ? (rep.var_oracle_lambda - rep.missing.mean) / se_risk : nan;
  return rep;
}

PolytopeResult run_polytope_rate(const ExperimentConfig& cfg) {
  cfg.validate();
  const Region region = Region::named(cfg.region);
  const double truth = region.exact_area();
  const std::vector<Point> normals = evenly_spaced_normals(cfg.normal_count);
  PolytopeResult result;
  for (std::size_t li = 0; li < cfg.lambdas.size(); ++li) {
    const double lambda = cfg.lambdas[li];
    Replicates<double> reps(static_cast<std::size_t>(cfg.replicates));
    reps.run(cfg.threads, [&](std::size_t m) {
      const PppSample s = sample_ppp(region, lambda, rng_for(cfg, li, m));
      if (s.points.empty()) return 0.0;
      const Hull hull = fixed_normal_hull(s.points, normals, UnboundedPolicy::Reject);
      return data_driven_estimate(classify(s.points, hull), area(hull)).value;
    });
    reps.check(cell_name("polytope lambda", lambda));
    const Aggregate a = aggregate(reps.column([](double v) { return v; }), truth);
    PolytopeRow row;
    row.k = cfg.normal_count;
    row.lambda = lambda;
    row.mse = a.rmse * a.rmse;
    row.bound = polytope_rate_bound(cfg.normal_count, lambda);
    row.ratio = row.mse / row.bound;
    result.rows.push_back(row);
    result.max_ratio = std::max(result.max_ratio, row.ratio);
  }
  result.growth = result.rows.back().ratio / result.rows.front().ratio;
  result.bounded = result.growth <= 1.5;
  return result;
}

SingleRun single_run(const ExperimentConfig& cfg) {
  cfg.validate();
  const Region region = Region::named(cfg.region);
  const double lambda = cfg.lambdas.front();
  SingleRun run{sample_ppp(region, lambda, rng_for(cfg, 0, 0)), Hull{}, 0.0, {}};
  HullParams params;
  params.cls = cfg.hull_class;
  params.radius = cfg.radii.empty() ? 0.0 : cfg.radii.front();
  params.normal_count = cfg.normal_count;
  run.radius = params.radius;
  run.hull = build_hull(run.sample.points, params);
  const HullStats st = classify(run.sample.points, run.hull);
  const double a = area(run.hull);
  run.estimates.push_back(naive_hull_volume(st, a));
  run.estimates.push_back(data_driven_estimate(st, a));
  run.estimates.push_back(oracle_estimate(st, a, lambda));
  if (cfg.hull_class == HullClass::Compact) run.estimates.push_back(compact_oracle_estimate(st.n_total, lambda));
  return run;
}

void write_table1_csv(std::ostream& out, const std::vector<McRow>& rows) {
  out << "r,n,mean_n_interior,mean_n_boundary,mean_n_isolated,rmse_oracle,rmse_data_driven,ratio,se_oracle,"
         "se_data_driven\n";
  for (const McRow& r : rows) {
    out << format_double(r.r) << ',' << format_double(r.n) << ',' << format_double(r.n_interior.mean) << ','
        << format_double(r.n_boundary.mean) << ',' << format_double(r.n_isolated.mean) << ','
        << format_double(r.oracle.rmse) << ',' << format_double(r.data_driven.rmse) << ',' << format_double(r.ratio)
        << ',' << format_double(r.oracle.se) << ',' << format_double(r.data_driven.se) << '\n';
  }
}

void write_table1_diagnostics_csv(std::ostream& out, const std::vector<McRow>& rows) {
  out << "r,n,mean_missing,var_missing,mean_excess,alpha,r_term\n";
  for (const McRow& r : rows) {
    if (!r.diagnostics) continue;
    const OracleDiagnostics& d = *r.diagnostics;
    out << format_double(r.r) << ',' << format_double(r.n) << ',' << format_double(d.mean_missing) << ','
        << format_double(d.var_missing) << ',' << format_double(d.mean_excess) << ',' << format_double(d.alpha) << ','
        << format_double(d.r_term) << '\n';
  }
}

void write_table2_csv(std::ostream& out, const std::vector<AdaptiveRow>& rows) {
  out << "n,mean_r_hat,rmse_adaptive,se\n";
  for (const AdaptiveRow& r : rows) {
    out << format_double(r.n) << ',' << format_double(r.r_hat.mean) << ',' << format_double(r.estimate.rmse) << ','
        << format_double(r.estimate.se) << '\n';
  }
}

void write_pi_csv(std::ostream& out, const PiResult& result) {
  out << "n,rmse_naive,rmse_opt\n";
  for (const PiRow& r : result.rows)
    out << format_double(r.n) << ',' << format_double(r.naive.rmse) << ',' << format_double(r.opt.rmse) << '\n';
}

void write_efron_csv(std::ostream& out, const EfronReport& r) {
  out << "lambda,replicates,area,mean_n_boundary,se_n_boundary,mean_missing,se_missing,lambda_mean_missing,z,"
         "z_paired,z_defined,mean_oracle,se_oracle,z_unbiased,var_oracle_lambda,se_var_oracle_lambda,z_risk\n";
  out << format_double(r.lambda) << ',' << r.replicates << ',' << format_double(r.area) << ','
      << format_double(r.n_boundary.mean) << ',' << format_double(r.n_boundary.se) << ','
      << format_double(r.missing.mean) << ',' << format_double(r.missing.se) << ','
      << format_double(r.lambda_mean_missing) << ',' << format_double(r.z) << ',' << format_double(r.z_paired) << ','
      << (r.defined ? 1 : 0) << ',' << format_double(r.oracle.mean) << ',' << format_double(r.oracle.se) << ','
      << format_double(r.z_unbiased) << ',' << format_double(r.var_oracle_lambda) << ','
      << format_double(r.var_oracle_lambda_se) << ',' << format_double(r.z_risk) << '\n';
}

void write_polytope_csv(std::ostream& out, const PolytopeResult& result) {
  out << "k,lambda,mse,bound,ratio\n";
  for (const PolytopeRow& r : result.rows) {
    out << r.k << ',' << format_double(r.lambda) << ',' << format_double(r.mse) << ',' << format_double(r.bound)
        << ',' << format_double(r.ratio) << '\n';
  }
}

void write_manifest(std::ostream& out, const ExperimentConfig& cfg) {
  out << "experiment=" << experiment_name(cfg.experiment) << '\n';
  out << "region=" << cfg.region << '\n';
  out << "class=" << hull_class_name(cfg.hull_class) << '\n';
  out << "seed=" << cfg.seed << '\n';
  out << "replicates=" << cfg.replicates << '\n';
  out << "radii=" << join(cfg.radii) << '\n';
  out << "sizes=" << join(cfg.sizes) << '\n';
  out << "lambdas=" << join(cfg.lambdas) << '\n';
  out << "normals=" << cfg.normal_count << '\n';
  out << "raster=" << cfg.raster << '\n';
  out << "diagnostics=" << (cfg.diagnostics ? 1 : 0) << '\n';
  out << "lepski_r_min=" << format_double(cfg.lepski.r_min) << '\n';
  out << "lepski_r_max=" << format_double(cfg.lepski.r_max) << '\n';
  out << "lepski_grid_size=" << cfg.lepski.grid_size << '\n';
  out << "kappa_rule=" << kappa_rule_name(cfg.lepski.kappa_rule) << '\n';
  out << "rng=mt19937_64/splitmix64 substreams keyed by (cell, replicate)\n";
}

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + p.string());
  return f;
}

}  // namespace

bool run_experiment(const ExperimentConfig& cfg, const std::string& out_dir, std::ostream& summary) {
  cfg.validate();
  namespace fs = std::filesystem;
  const fs::path dir(out_dir.empty() ? "." : out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string());
  const std::string name = experiment_name(cfg.experiment);
  {
    auto mf = open_out(dir / (name + ".manifest"));
    write_manifest(mf, cfg);
  }
  auto csv = open_out(dir / (name + ".csv"));
  bool ok = true;
  switch (cfg.experiment) {
    case Experiment::Table1: {
      const auto rows = run_table1(cfg);
      write_table1_csv(csv, rows);
      write_table1_csv(summary, rows);
      if (cfg.diagnostics) {
        auto d = open_out(dir / "table1_diagnostics.csv");
        write_table1_diagnostics_csv(d, rows);
      }
      break;
    }
    case Experiment::Table2Adaptive: {
      const auto rows = run_table2_adaptive(cfg);
      write_table2_csv(csv, rows);
      write_table2_csv(summary, rows);
      break;
    }
    case Experiment::PiRates: {
      const auto res = run_pi_rates(cfg);
      write_pi_csv(csv, res);
      summary << "estimator,slope,intercept,r_squared\n";
      summary << "naive," << format_double(res.naive.slope) << ',' << format_double(res.naive.intercept) << ','
              << format_double(res.naive.r_squared) << '\n';
      summary << "opt," << format_double(res.opt.slope) << ',' << format_double(res.opt.intercept) << ','
              << format_double(res.opt.r_squared) << '\n';
      break;
    }
    case Experiment::EfronCheck: {
      const auto rep = run_efron_check(cfg);
      write_efron_csv(csv, rep);
      ok = rep.defined && std::abs(rep.z) <= 3.0;
      summary << (ok ? "PASS" : "FAIL") << " efron z=" << format_double(rep.z)
              << " mean_n_boundary=" << format_double(rep.n_boundary.mean)
              << " lambda_mean_missing=" << format_double(rep.lambda_mean_missing) << '\n';
      break;
    }
    case Experiment::PolytopeRate: {
      const auto res = run_polytope_rate(cfg);
      write_polytope_csv(csv, res);
      write_polytope_csv(summary, res);
      ok = res.bounded;
      summary << (ok ? "PASS" : "FAIL") << " polytope growth=" << format_double(res.growth)
              << " max_ratio=" << format_double(res.max_ratio) << '\n';
      break;
    }
    case Experiment::SingleRun: {
      const SingleRun run = single_run(cfg);
      {
        auto pts = open_out(dir / "simulate_points.csv");
        write_points_csv(pts, run.sample.points);
        auto hull = open_out(dir / "simulate_hull.txt");
        write_hull_text(hull, run.hull);
      }
      csv << kEstimateCsvHeader << '\n';
      summary << kEstimateCsvHeader << '\n';
      for (const VolumeEstimate& e : run.estimates) {
        write_estimate_row(csv, cfg.hull_class, run.radius, e);
        write_estimate_row(summary, cfg.hull_class, run.radius, e);
      }
      break;
    }
  }
  if (!csv) throw Error(ErrorCode::IoError, "write failed for " + (dir / (name + ".csv")).string());
  return ok;
}

}  // namespace wraphull
