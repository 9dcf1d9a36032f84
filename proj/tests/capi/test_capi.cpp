#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wraphull/wraphull.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

TEST_CASE("status and names") {
  CHECK(std::string(wh_status_name(WH_OK)) == "Ok");
  CHECK(std::string(wh_status_name(WH_CELL_FAILED)) == "CellFailed");
  CHECK(std::string(wh_status_name(WH_INTERNAL_ERROR)) == "InternalError");
  CHECK(std::string(wh_status_name(55)) == "Unknown");
  CHECK(wh_hull_class_parse("rconvex") == WH_CLASS_RCONVEX);
  CHECK(wh_hull_class_parse("fixed-normal") == WH_CLASS_FIXED_NORMAL);
  CHECK(wh_hull_class_parse("blob") == -1);
  CHECK(wh_hull_class_parse(nullptr) == -1);
  CHECK(std::string(wh_hull_class_name(WH_CLASS_INTERVAL)) == "interval");
  CHECK(std::string(wh_estimate_kind_name(WH_EST_DATA_DRIVEN)) == "data_driven");
  CHECK(std::strlen(wh_version()) > 0);
}

TEST_CASE("points, hulls and estimates") {
  const double xs[] = {0.1, 0.9, 0.5, 0.5};
  const double ys[] = {0.1, 0.1, 0.8, 0.3};
  wh_points* pts = nullptr;
  REQUIRE(wh_points_create(2, xs, ys, 4, nullptr, &pts) == WH_OK);
  CHECK(wh_points_size(pts) == 4);
  CHECK(wh_points_dim(pts) == 2);
  double x = 0, y = 0;
  CHECK(wh_points_get(pts, 2, &x, &y) == WH_OK);
  CHECK(x == 0.5);
  CHECK(y == 0.8);
  CHECK(wh_points_get(pts, 9, &x, &y) == WH_INVALID_ARGUMENT);

  wh_hull_params params{WH_CLASS_CONVEX, 0.0, 0};
  wh_hull* hull = nullptr;
  REQUIRE(wh_hull_build(pts, &params, &hull) == WH_OK);
  double a = 0;
  CHECK(wh_hull_area(hull, &a) == WH_OK);
  CHECK(a == doctest::Approx(0.28));
  int in = 0;
  CHECK(wh_hull_contains(hull, 0.5, 0.2, &in) == WH_OK);
  CHECK(in == 1);
  wh_hull_stats st{};
  CHECK(wh_classify(pts, hull, &st) == WH_OK);
  CHECK(st.n_total == 4);
  CHECK(st.n_boundary == 3);
  CHECK(st.n_interior == 1);

  wh_estimate e{};
  CHECK(wh_estimate_data_driven(pts, hull, &e) == WH_OK);
  CHECK(e.value == doctest::Approx(5.0 / 2.0 * 0.28));
  CHECK(e.kind == WH_EST_DATA_DRIVEN);
  CHECK(e.has_lambda == 0);
  CHECK(wh_estimate_oracle(pts, hull, 100.0, &e) == WH_OK);
  CHECK(e.value == doctest::Approx(0.31));
  CHECK(e.has_lambda == 1);
  CHECK(wh_estimate_oracle(pts, hull, 0.0, &e) == WH_INVALID_ARGUMENT);
  CHECK(std::strlen(wh_last_error()) > 0);
  CHECK(wh_estimate_naive(pts, hull, &e) == WH_OK);
  CHECK(e.value == doctest::Approx(0.28));
  CHECK(wh_estimate_compact_oracle(pts, 100.0, &e) == WH_OK);
  CHECK(e.value == doctest::Approx(0.04));

  char* row = nullptr;
  CHECK(wh_estimate_csv_row(WH_CLASS_CONVEX, 0.0, &e, &row) == WH_OK);
  CHECK(std::string(row).rfind("convex,,100,4,", 0) == 0);
  wh_string_free(row);
  CHECK(std::string(wh_estimate_csv_header()).rfind("class,r,lambda", 0) == 0);

  char* text = nullptr;
  CHECK(wh_hull_to_text(hull, &text) == WH_OK);
  CHECK(std::string(text).rfind("convex,0,", 0) == 0);
  wh_string_free(text);

  wh_hull_free(hull);
  wh_points_free(pts);
}

TEST_CASE("error codes") {
  const double xs[] = {0.1, 0.1};
  const double ys[] = {0.2, 0.2};
  wh_points* pts = nullptr;
  CHECK(wh_points_create(2, xs, ys, 2, nullptr, &pts) == WH_DUPLICATE_POINT);
  CHECK(pts == nullptr);
  const double out_x[] = {1.5};
  CHECK(wh_points_create(1, out_x, nullptr, 1, nullptr, &pts) == WH_POINT_OUTSIDE_WINDOW);
  CHECK(wh_points_create(3, xs, ys, 2, nullptr, &pts) == WH_INVALID_ARGUMENT);
  CHECK(wh_points_create(2, xs, ys, 1, nullptr, nullptr) == WH_INVALID_ARGUMENT);

  const double win[] = {1.0, 3.0, 0.0, 0.0};
  CHECK(wh_points_create(1, out_x, nullptr, 1, win, &pts) == WH_OK);
  wh_hull_params params{WH_CLASS_RCONVEX, 0.1, 0};
  wh_hull* hull = nullptr;
  CHECK(wh_hull_build(pts, &params, &hull) == WH_INVALID_ARGUMENT);  // planar class on a line
  params = {WH_CLASS_INTERVAL, 0.0, 0};
  CHECK(wh_hull_build(pts, &params, &hull) == WH_OK);
  wh_hull_free(hull);
  wh_points_free(pts);

  const double px[] = {0.2, 0.4};
  const double py[] = {0.2, 0.4};
  REQUIRE(wh_points_create(2, px, py, 2, nullptr, &pts) == WH_OK);
  params = {WH_CLASS_RCONVEX, -1.0, 0};
  CHECK(wh_hull_build(pts, &params, &hull) == WH_BAD_RADIUS);
  params = {WH_CLASS_FIXED_NORMAL, 0.0, 2};
  CHECK(wh_hull_build(pts, &params, &hull) == WH_INVALID_ARGUMENT);
  params = {17, 0.0, 0};
  CHECK(wh_hull_build(pts, &params, &hull) == WH_INVALID_ARGUMENT);
  wh_points_free(pts);

  wh_points_free(nullptr);
  wh_hull_free(nullptr);
  wh_region_free(nullptr);
  wh_string_free(nullptr);
}

TEST_CASE("csv files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "wraphull_capi_test";
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "bad.csv");
    f << "x,y\n0.1,0.2\n0.3,zz\n";
  }
  wh_points* pts = nullptr;
  CHECK(wh_points_read_csv((dir / "bad.csv").c_str(), nullptr, &pts) == WH_PARSE_ERROR);
  CHECK(std::string(wh_last_error()).find("line 3") != std::string::npos);
  CHECK(wh_points_read_csv((dir / "missing.csv").c_str(), nullptr, &pts) == WH_IO_ERROR);
  {
    std::ofstream f(dir / "wide.csv");
    f << "x,y\n1.5,2.5\n3.5,4.5\n2.0,4.0\n";
  }
  const double win[] = {1.0, 4.0, 2.0, 5.0};
  REQUIRE(wh_points_read_csv((dir / "wide.csv").c_str(), win, &pts) == WH_OK);
  CHECK(wh_points_size(pts) == 3);
  CHECK(wh_points_write_csv(pts, (dir / "copy.csv").c_str()) == WH_OK);
  wh_points_free(pts);
  CHECK(wh_points_read_csv((dir / "wide.csv").c_str(), nullptr, &pts) == WH_POINT_OUTSIDE_WINDOW);
  fs::remove_all(dir);
}

TEST_CASE("regions, sampling and Lepski") {
  wh_region* reg = nullptr;
  REQUIRE(wh_region_named("annulus", &reg) == WH_OK);
  double a = 0;
  CHECK(wh_region_area(reg, &a) == WH_OK);
  CHECK(a == doctest::Approx(3.0 * M_PI / 16.0));
  int in = 1;
  CHECK(wh_region_contains(reg, 0.5, 0.5, &in) == WH_OK);
  CHECK(in == 0);
  CHECK(wh_region_named("nowhere", &reg) != WH_OK);

  wh_points* s1 = nullptr;
  wh_points* s2 = nullptr;
  REQUIRE(wh_sample_ppp(reg, 300.0, 9, 1, &s1) == WH_OK);
  REQUIRE(wh_sample_ppp(reg, 300.0, 9, 1, &s2) == WH_OK);
  REQUIRE(wh_points_size(s1) == wh_points_size(s2));
  for (size_t i = 0; i < wh_points_size(s1); ++i) {
    double x1, y1, x2, y2;
    wh_points_get(s1, i, &x1, &y1);
    wh_points_get(s2, i, &x2, &y2);
    CHECK(x1 == x2);
    CHECK(y1 == y2);
  }
  double r_hat = 0, est = 0;
  CHECK(wh_lepski(s1, 0.04, 0.5, 23, WH_KAPPA_BOUNDARY_SD, &r_hat, &est) == WH_OK);
  CHECK(r_hat >= 0.06 - 1e-12);
  CHECK(r_hat <= 0.5);
  CHECK(est > 0.0);
  CHECK(wh_lepski(s1, 0.04, 0.5, 1, WH_KAPPA_BOUNDARY_SD, &r_hat, &est) == WH_INVALID_ARGUMENT);
  CHECK(wh_lepski(s1, 0.04, 0.5, 23, 9, &r_hat, &est) == WH_INVALID_ARGUMENT);
  wh_points_free(s1);
  wh_points_free(s2);

  wh_points* u = nullptr;
  CHECK(wh_sample_uniform(reg, 25, 9, 2, &u) == WH_OK);
  CHECK(wh_points_size(u) == 25);
  wh_points_free(u);
  wh_region_free(reg);

  wh_region* sq = nullptr;
  REQUIRE(wh_region_named("square", &sq) == WH_OK);
  wh_points* ps = nullptr;
  REQUIRE(wh_sample_uniform(sq, 1000, 4, 4, &ps) == WH_OK);
  double pn = 0, po = 0;
  int degenerate = 1;
  CHECK(wh_pi_estimates(ps, &pn, &po, &degenerate) == WH_OK);
  CHECK(degenerate == 0);
  CHECK(std::abs(pn - M_PI) < 0.3);
  CHECK(std::abs(po - M_PI) < 0.1);
  wh_points_free(ps);
  wh_region_free(sq);
}

TEST_CASE("experiments") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "wraphull_capi_exp";
  fs::remove_all(dir);
  wh_experiment_config cfg;
  REQUIRE(wh_experiment_config_init(WH_EXP_TABLE1, &cfg) == WH_OK);
  CHECK(cfg.replicates == 200);
  CHECK(cfg.radii == nullptr);
  const double radii[] = {0.1, 0.25};
  const double sizes[] = {50};
  cfg.radii = radii;
  cfg.n_radii = 2;
  cfg.sizes = sizes;
  cfg.n_sizes = 1;
  cfg.replicates = 3;
  char* summary = nullptr;
  int passed = 0;
  REQUIRE(wh_run_experiment(&cfg, dir.c_str(), &summary, &passed) == WH_OK);
  CHECK(passed == 1);
  CHECK(std::string(summary).rfind("r,n,", 0) == 0);
  wh_string_free(summary);
  CHECK(fs::exists(dir / "table1.csv"));
  CHECK(fs::exists(dir / "table1.manifest"));

  const double bad[] = {0.25, 0.1};
  cfg.radii = bad;
  CHECK(wh_run_experiment(&cfg, dir.c_str(), nullptr, nullptr) == WH_INVALID_ARGUMENT);
  CHECK(wh_experiment_config_init(42, &cfg) == WH_INVALID_ARGUMENT);

  REQUIRE(wh_experiment_config_init(WH_EXP_SIMULATE, &cfg) == WH_OK);
  cfg.region = "interval";
  cfg.hull_class = WH_CLASS_INTERVAL;
  REQUIRE(wh_run_experiment(&cfg, dir.c_str(), &summary, &passed) == WH_OK);
  CHECK(std::string(summary).find("interval,,") != std::string::npos);
  wh_string_free(summary);
  fs::remove_all(dir);
}
