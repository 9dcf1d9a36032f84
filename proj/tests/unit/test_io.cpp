#include <doctest.h>

#include <sstream>
#include <string>

#include "wraphull/error.hpp"
#include "wraphull/hulls.hpp"
#include "wraphull/io.hpp"
#include "wraphull/region.hpp"
#include "wraphull/sampling.hpp"

using namespace wraphull;

namespace {

std::string parse_message(const std::string& text) {
  std::istringstream in(text);
  try {
    read_points_csv(in);
  } catch (const Error& e) {
    return std::string(error_code_name(e.code())) + ": " + e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("points csv round trip") {
  const auto ps = sample_ppp(Region::named("annulus"), 300, {51, 1}).points;
  std::stringstream buf;
  write_points_csv(buf, ps);
  const auto back = read_points_csv(buf);
  CHECK(back.points() == ps.points());
  CHECK(back.window() == Window::unit(2));

  const auto one = PointSet::from_1d(std::vector<double>{0.1, 0.3333333333333333, 0.9});
  std::stringstream b1;
  write_points_csv(b1, one);
  CHECK(b1.str().rfind("x\n", 0) == 0);
  const auto back1 = read_points_csv(b1);
  CHECK(back1.dim() == 1);
  CHECK(back1.points() == one.points());
}

TEST_CASE("points csv errors carry line numbers") {
  CHECK(parse_message("x,y\n0.1,0.2\n0.3,abc\n").find("line 3") != std::string::npos);
  CHECK(parse_message("x,y\n0.1,0.2\n0.3\n").find("line 3") != std::string::npos);
  CHECK(parse_message("x,y\n0.1,0.2,0.5\n").find("line 2") != std::string::npos);
  CHECK(parse_message("a,b\n0.1,0.2\n").find("line 1") != std::string::npos);
  CHECK(parse_message("").find("ParseError") == 0);
  CHECK(parse_message("x,y\n0.1,0.2\n0.1,0.2\n").find("DuplicatePoint") == 0);
  CHECK(parse_message("x,y\n0.1,1.2\n").find("PointOutsideWindow") == 0);
  CHECK(parse_message("x,y\n\n0.1,0.2\n\n0.4,0.5\n") == "no error");
  CHECK(parse_message("x,y\r\n0.1,0.2\r\n") == "no error");

  std::istringstream in("x\n0.5\n");
  CHECK_THROWS_AS(read_points_csv(in, Window::unit(2)), Error);
}

TEST_CASE("points csv with a native window") {
  std::istringstream in("x,y\n1.5,2.5\n3.0,4.0\n");
  const auto ps = read_points_csv(in, Window(2, {1.0, 2.0}, {3.0, 5.0}));
  CHECK(ps.size() == 2);
  CHECK(ps.window().volume() == 6.0);
}

TEST_CASE("hull text round trip for every class") {
  const auto ps = sample_ppp(Region::named("annulus"), 300, {52, 1}).points;
  for (const HullParams& p : {HullParams{HullClass::Convex, 0, 0}, HullParams{HullClass::RConvex, 0.1, 0},
                              HullParams{HullClass::RConvex, 0.03, 0}, HullParams{HullClass::FixedNormal, 0, 8},
                              HullParams{HullClass::Compact, 0, 0}}) {
    CAPTURE(hull_class_name(p.cls));
    const Hull h = build_hull(ps, p);
    std::stringstream buf;
    write_hull_text(buf, h);
    const HullText t = read_hull_text(buf);
    CHECK(t.type == hull_class_name(p.cls));
    CHECK(t.area == area(h));
    if (p.cls == HullClass::RConvex) {
      const auto& ap = std::get<ArcPolygon>(h);
      CHECK(t.param == p.radius);
      std::size_t edges = 0;
      for (const auto& l : ap.loops) edges += l.edges.size();
      CHECK(t.arcs.size() == edges);
      CHECK(t.isolated_points == ap.isolated_points);
      CHECK(t.isolated_segments.size() == ap.isolated_segments.size());
      // loops rebuilt from the text give the same signed area
      std::vector<ArcLoop> loops;
      for (const auto& [li, e] : t.arcs) {
        if (static_cast<std::size_t>(li) >= loops.size()) loops.resize(li + 1);
        loops[li].edges.push_back(e);
      }
      REQUIRE(loops.size() == ap.loops.size());
      for (std::size_t i = 0; i < loops.size(); ++i)
        CHECK(loops[i].signed_area() == ap.loops[i].signed_area());
    } else if (p.cls == HullClass::FixedNormal) {
      CHECK(t.param == 8.0);
      CHECK(t.vertices == std::get<HalfspaceHull>(h).polygon.vertices);
    } else if (p.cls == HullClass::Convex) {
      CHECK(t.vertices == std::get<ConvexPolygon>(h).vertices);
    } else {
      CHECK(t.vertices.size() == ps.size());
    }
  }
  const auto one = PointSet::from_1d(std::vector<double>{0.2, 0.7, 0.4});
  std::stringstream b1;
  write_hull_text(b1, build_hull(one, {HullClass::Interval, 0, 0}));
  const HullText t1 = read_hull_text(b1);
  CHECK(t1.type == "interval");
  CHECK(t1.low == 0.2);
  CHECK(t1.high == 0.7);
}

TEST_CASE("hull text rejects malformed input") {
  std::istringstream bad("rconvex,0.1,0.5\n0,0,1,2\n");
  CHECK_THROWS_AS(read_hull_text(bad), Error);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_hull_text(empty), Error);
}

TEST_CASE("estimate rows") {
  VolumeEstimate e;
  e.value = 1.25;
  e.hull_area = 0.5;
  e.kind = EstimateKind::Oracle;
  e.stats.n_total = 10;
  e.stats.n_boundary = 3;
  e.stats.n_interior = 7;
  e.lambda = 100.0;
  std::ostringstream a, b;
  write_estimate_row(a, HullClass::RConvex, 0.25, e);
  CHECK(a.str() == "rconvex,0.25,100,10,3,7,0,0.5,oracle,1.25\n");
  e.lambda.reset();
  e.kind = EstimateKind::DataDriven;
  write_estimate_row(b, HullClass::Convex, 0.25, e);
  CHECK(b.str() == "convex,,,10,3,7,0,0.5,data_driven,1.25\n");
  CHECK(std::string(kEstimateCsvHeader) ==
        "class,r,lambda,n,n_boundary,n_interior,n_isolated,hull_area,estimate_kind,value");
  CHECK(std::stod(format_double(0.1)) == 0.1);
}
