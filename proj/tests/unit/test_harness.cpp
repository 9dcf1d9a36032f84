#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wraphull/error.hpp"
#include "wraphull/harness.hpp"
#include "wraphull/hulls.hpp"
#include "wraphull/region.hpp"
#include "wraphull/sampling.hpp"
#include "replicates.hpp"

using namespace wraphull;

namespace {

ExperimentConfig small_table1() {
  auto cfg = ExperimentConfig::defaults(Experiment::Table1);
  cfg.radii = {0.1, 0.25};
  cfg.sizes = {50, 100};
  cfg.replicates = 6;
  cfg.seed = 3;
  return cfg;
}

std::string table1_text(ExperimentConfig cfg, int threads) {
  cfg.threads = threads;
  std::ostringstream os;
  write_table1_csv(os, run_table1(cfg));
  return os.str();
}

}  // namespace

TEST_CASE("experiment defaults") {
  const auto t1 = ExperimentConfig::defaults(Experiment::Table1);
  CHECK(t1.region == "annulus");
  CHECK(t1.radii == std::vector<double>{0.04, 0.1, 0.25, 0.3});
  CHECK(t1.sizes == std::vector<double>{50, 100, 200, 300, 400});
  CHECK(t1.replicates == 200);
  CHECK(ExperimentConfig::defaults(Experiment::Table2Adaptive).sizes.size() == 7);
  CHECK(ExperimentConfig::defaults(Experiment::PiRates).sizes == std::vector<double>{500, 1000, 2000, 4000, 8000});
  const auto ef = ExperimentConfig::defaults(Experiment::EfronCheck);
  CHECK(ef.region == "disk");
  CHECK(ef.replicates == 2000);
  const auto po = ExperimentConfig::defaults(Experiment::PolytopeRate);
  CHECK(po.normal_count == 4);
  CHECK(po.lambdas == std::vector<double>{250, 500, 1000, 2000});
  CHECK(po.replicates == 500);
  CHECK(parse_experiment("polytope-rate") == Experiment::PolytopeRate);
  CHECK(parse_experiment("table2") == Experiment::Table2Adaptive);
  CHECK_FALSE(parse_experiment("table3").has_value());
}

TEST_CASE("config validation") {
  auto cfg = small_table1();
  cfg.radii = {0.25, 0.1};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = small_table1();
  cfg.sizes = {};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = small_table1();
  cfg.replicates = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = small_table1();
  cfg.region = "nowhere";
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = small_table1();
  cfg.region = "interval";
  CHECK_THROWS_AS(cfg.validate(), Error);
  auto sim = ExperimentConfig::defaults(Experiment::SingleRun);
  sim.region = "interval";
  CHECK_THROWS_AS(sim.validate(), Error);
  sim.hull_class = HullClass::Interval;
  CHECK_NOTHROW(sim.validate());
}

TEST_CASE("table1 rows: one per cell, counts add up") {
  auto cfg = small_table1();
  cfg.replicates = 1;
  const auto rows1 = run_table1(cfg);
  CHECK(rows1.size() == 4);
  for (const auto& r : rows1) CHECK(std::isfinite(r.data_driven.rmse));

  cfg.replicates = 20;
  for (const auto& r : run_table1(cfg)) {
    CHECK(std::abs(r.n_interior.mean + r.n_boundary.mean - r.n_total.mean) <= 1e-9);
    CHECK(r.lambda == doctest::Approx(r.n / Region::named("annulus").exact_area()));
    CHECK(r.failures == 0);
  }
}

TEST_CASE("output does not depend on the worker count") {
  const auto cfg = small_table1();
  const std::string one = table1_text(cfg, 1);
  CHECK(one == table1_text(cfg, 3));
  CHECK(one == table1_text(cfg, 8));

  auto t2 = ExperimentConfig::defaults(Experiment::Table2Adaptive);
  t2.sizes = {50, 200};
  t2.replicates = 4;
  std::ostringstream a, b;
  t2.threads = 1;
  write_table2_csv(a, run_table2_adaptive(t2));
  t2.threads = 4;
  write_table2_csv(b, run_table2_adaptive(t2));
  CHECK(a.str() == b.str());
}

TEST_CASE("table2 smoke run") {
  auto cfg = ExperimentConfig::defaults(Experiment::Table2Adaptive);
  cfg.replicates = 1;
  cfg.seed = 7;
  const auto rows = run_table2_adaptive(cfg);
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) {
    CHECK(std::isfinite(r.r_hat.mean));
    CHECK(std::isfinite(r.estimate.rmse));
    CHECK(r.r_hat.mean >= 0.06 - 1e-12);
    CHECK(r.r_hat.mean <= 0.5);
  }
}

TEST_CASE("a cell aborts when more than 1% of its replicates fail") {
  auto fill = [](detail::Replicates<double>& reps, std::size_t failing, int threads) -> detail::Replicates<double>& {
    reps.run(threads, [&](std::size_t i) -> double {
      if (i < failing) throw Error(ErrorCode::InconsistentHull, "injected");
      return static_cast<double>(i);
    });
    return reps;
  };
  detail::Replicates<double> two(200), three(200), all(50);
  CHECK(fill(two, 2, 3).check("ok") == 2);
  CHECK(two.column([](double v) { return v; }).size() == 198);
  try {
    fill(three, 3, 3).check("cell");
    FAIL("expected CellFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CellFailed);
    CHECK(std::string(e.what()).find("3 of 200") != std::string::npos);
    CHECK(std::string(e.what()).find("injected") != std::string::npos);
  }
  CHECK_THROWS_AS(fill(all, 50, 1).check("all"), Error);

  // non-library exceptions escape the pool
  CHECK_THROWS_AS(detail::parallel_for(10, 3, [](std::size_t i) {
                    if (i == 5) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}

TEST_CASE("raster volumes") {
  const Region a = Region::named("annulus");
  const auto ps = sample_ppp(a, 300, {61, 1}).points;
  for (double r : {0.04, 0.1, 0.25}) {
    const Hull h = build_hull(ps, {HullClass::RConvex, r, 0});
    // fast mask against direct membership tests
    const int res = 128;
    double miss = 0.0, exc = 0.0;
    for (int i = 0; i < res; ++i) {
      for (int j = 0; j < res; ++j) {
        const Point c{(i + 0.5) / res, (j + 0.5) / res};
        const bool in_h = contains(h, c), in_a = a.contains(c);
        miss += in_a && !in_h;
        exc += in_h && !in_a;
      }
    }
    const auto rv = raster_volumes(a, h, res);
    CHECK(rv.missing == doctest::Approx(miss / (res * res)).epsilon(1e-12));
    CHECK(rv.excess == doctest::Approx(exc / (res * res)).epsilon(1e-12));

    // resolution doubling
    const auto coarse = raster_volumes(a, h, 256);
    const auto fine = raster_volumes(a, h, 512);
    const double cell = 1.0 / 256;
    const double length = 2.0 * a.boundary_length();
    CHECK(std::abs(coarse.missing - fine.missing) <= 4.0 * cell * length);
    // hull inside the convex set gives no excess for a convex truth
  }
  const Region d = Region::named("disk");
  const auto dp = sample_ppp(d, 200, {61, 2}).points;
  CHECK(raster_volumes(d, build_hull(dp, {HullClass::Convex, 0, 0}), 256).excess == 0.0);
}

TEST_CASE("efron report and polytope result shapes") {
  auto ef = ExperimentConfig::defaults(Experiment::EfronCheck);
  ef.replicates = 1;
  const auto one = run_efron_check(ef);
  CHECK_FALSE(one.defined);
  CHECK(std::isnan(one.z));
  ef.replicates = 50;
  const auto rep = run_efron_check(ef);
  CHECK(rep.defined);
  CHECK(std::isfinite(rep.z));
  CHECK(rep.lambda_mean_missing == doctest::Approx(rep.lambda * rep.missing.mean));

  auto po = ExperimentConfig::defaults(Experiment::PolytopeRate);
  po.replicates = 20;
  po.lambdas = {250, 500};
  const auto pr = run_polytope_rate(po);
  REQUIRE(pr.rows.size() == 2);
  for (const auto& r : pr.rows) {
    CHECK(r.k == 4);
    CHECK(r.bound == doctest::Approx(polytope_rate_bound(4, r.lambda)));
    CHECK(r.ratio == doctest::Approx(r.mse / r.bound));
  }
  CHECK(pr.growth == doctest::Approx(pr.rows[1].ratio / pr.rows[0].ratio));
}

TEST_CASE("run_experiment writes csv and manifest") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "wraphull_harness_test";
  fs::remove_all(dir);
  auto cfg = small_table1();
  cfg.threads = 2;
  std::ostringstream summary;
  CHECK(run_experiment(cfg, dir.string(), summary));
  std::ifstream csv(dir / "table1.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "r,n,mean_n_interior,mean_n_boundary,mean_n_isolated,rmse_oracle,rmse_data_driven,ratio,se_oracle,"
        "se_data_driven");
  std::ifstream mf(dir / "table1.manifest");
  std::stringstream m;
  m << mf.rdbuf();
  CHECK(m.str().find("seed=3") != std::string::npos);
  CHECK(m.str().find("threads") == std::string::npos);
  CHECK(summary.str().rfind("r,n,", 0) == 0);

  auto sim = ExperimentConfig::defaults(Experiment::SingleRun);
  std::ostringstream s2;
  CHECK(run_experiment(sim, dir.string(), s2));
  CHECK(fs::exists(dir / "simulate_points.csv"));
  CHECK(fs::exists(dir / "simulate_hull.txt"));
  fs::remove_all(dir);
}
