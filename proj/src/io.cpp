#include "wraphull/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wraphull/error.hpp"

namespace wraphull {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  throw Error(ErrorCode::ParseError, os.str());
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_number(const std::string& s, double& v) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  return ec == std::errc() && ptr == last;
}

double field_number(const std::vector<std::string>& f, std::size_t i, std::size_t line) {
  double v = 0.0;
  if (i >= f.size() || !parse_number(f[i], v)) parse_error(line, "expected a number in column " + std::to_string(i + 1));
  if (!std::isfinite(v)) parse_error(line, "non-finite coordinate");
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PointSet read_points_csv(std::istream& in, const Window& window) {
  std::string line;
  std::size_t lineno = 0;
  int dim = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto f = split(t);
    if (f.size() == 2 && f[0] == "x" && f[1] == "y") dim = 2;
    else if (f.size() == 1 && f[0] == "x") dim = 1;
    else parse_error(lineno, "expected header 'x,y' or 'x'");
    break;
  }
  if (dim == 0) parse_error(lineno + 1, "missing header");
  if (dim != window.dim()) parse_error(lineno, "header dimension does not match the window");
  std::vector<Point> pts;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto f = split(t);
    if (static_cast<int>(f.size()) != dim)
      parse_error(lineno, "expected " + std::to_string(dim) + " column(s), got " + std::to_string(f.size()));
    const double x = field_number(f, 0, lineno);
    const double y = dim == 2 ? field_number(f, 1, lineno) : 0.0;
    pts.push_back({x, y});
  }
  return PointSet(std::move(pts), window);
}

PointSet read_points_csv(std::istream& in) {
  // Peek at the header to pick the dimension.
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream probe(text);
  std::string line;
  int dim = 2;
  while (std::getline(probe, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t == "x") dim = 1;
    break;
  }
  std::istringstream body(text);
  return read_points_csv(body, Window::unit(dim));
}

PointSet read_points_csv_file(const std::string& path, const Window& window) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_points_csv(in, window);
}

void write_points_csv(std::ostream& out, const PointSet& points) {
  if (points.dim() == 1) {
    out << "x\n";
    for (const Point& p : points) out << format_double(p.x) << '\n';
  } else {
    out << "x,y\n";
    for (const Point& p : points) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
  }
}

namespace {

void write_vertices(std::ostream& out, const std::vector<Point>& vs) {
  for (const Point& p : vs) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

}  // namespace

void write_hull_text(std::ostream& out, const Hull& hull) {
  const HullClass cls = hull_class(hull);
  double param = 0.0;
  if (const auto* a = std::get_if<ArcPolygon>(&hull)) param = a->radius;
  if (const auto* h = std::get_if<HalfspaceHull>(&hull)) param = static_cast<double>(h->normals.size());
  out << hull_class_name(cls) << ',' << format_double(param) << ',' << format_double(area(hull)) << '\n';
  std::visit(
      [&](const auto& h) {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>) {
          write_vertices(out, h.vertices);
        } else if constexpr (std::is_same_v<T, HalfspaceHull>) {
          write_vertices(out, h.polygon.vertices);
        } else if constexpr (std::is_same_v<T, SampleHull>) {
          write_vertices(out, h.points);
        } else if constexpr (std::is_same_v<T, IntervalHull>) {
          out << format_double(h.low) << ',' << format_double(h.high) << '\n';
        } else {
          for (std::size_t i = 0; i < h.loops.size(); ++i) {
            for (const ArcEdge& e : h.loops[i].edges) {
              out << i << ',' << (h.loops[i].hole ? 1 : 0) << ',' << format_double(e.start.x) << ','
                  << format_double(e.start.y) << ',' << format_double(e.end.x) << ',' << format_double(e.end.y);
              if (e.straight) {
                out << ",,,,straight\n";
              } else {
                out << ',' << format_double(e.center.x) << ',' << format_double(e.center.y) << ','
                    << format_double(e.radius) << ',' << (e.bulge == Bulge::Left ? "left" : "right") << '\n';
              }
            }
          }
          for (const Point& p : h.isolated_points) out << "-1,0," << format_double(p.x) << ',' << format_double(p.y) << '\n';
          for (const auto& [a, b] : h.isolated_segments)
            out << "-2,0," << format_double(a.x) << ',' << format_double(a.y) << ',' << format_double(b.x) << ','
                << format_double(b.y) << '\n';
        }
      },
      hull);
}

HullText read_hull_text(std::istream& in) {
  HullText h;
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) parse_error(1, "missing hull header");
  ++lineno;
  auto f = split(trim(line));
  if (f.size() != 3) parse_error(lineno, "expected header 'type,param,area'");
  h.type = f[0];
  if (!parse_hull_class(h.type)) parse_error(lineno, "unknown hull type '" + h.type + "'");
  h.param = field_number(f, 1, lineno);
  h.area = field_number(f, 2, lineno);
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    f = split(t);
    if (h.type == "interval") {
      if (f.size() != 2) parse_error(lineno, "expected 'low,high'");
      h.low = field_number(f, 0, lineno);
      h.high = field_number(f, 1, lineno);
    } else if (h.type != "rconvex") {
      if (f.size() != 2) parse_error(lineno, "expected 'x,y'");
      h.vertices.push_back({field_number(f, 0, lineno), field_number(f, 1, lineno)});
    } else {
      if (f.size() < 4) parse_error(lineno, "short rconvex line");
      const double tag = field_number(f, 0, lineno);
      if (tag == -1.0) {
        h.isolated_points.push_back({field_number(f, 2, lineno), field_number(f, 3, lineno)});
      } else if (tag == -2.0) {
        h.isolated_segments.push_back({{field_number(f, 2, lineno), field_number(f, 3, lineno)},
                                       {field_number(f, 4, lineno), field_number(f, 5, lineno)}});
      } else {
        if (f.size() != 10) parse_error(lineno, "expected 10 columns in an arc line");
        ArcEdge e;
        e.start = {field_number(f, 2, lineno), field_number(f, 3, lineno)};
        e.end = {field_number(f, 4, lineno), field_number(f, 5, lineno)};
        if (f[9] == "straight") {
          e.straight = true;
        } else {
          e.center = {field_number(f, 6, lineno), field_number(f, 7, lineno)};
          e.radius = field_number(f, 8, lineno);
          if (f[9] != "left" && f[9] != "right") parse_error(lineno, "bulge must be left, right or straight");
          e.bulge = f[9] == "left" ? Bulge::Left : Bulge::Right;
        }
        const int loop = static_cast<int>(tag);
        if (field_number(f, 1, lineno) != 0.0 &&
            (h.hole_loops.empty() || h.hole_loops.back() != loop))
          h.hole_loops.push_back(loop);
        h.arcs.emplace_back(loop, e);
      }
    }
  }
  return h;
}

void write_estimate_row(std::ostream& out, HullClass cls, double r, const VolumeEstimate& est) {
  out << hull_class_name(cls) << ',';
  if (cls == HullClass::RConvex) out << format_double(r);
  out << ',';
  if (est.lambda) out << format_double(*est.lambda);
  out << ',' << est.stats.n_total << ',' << est.stats.n_boundary << ',' << est.stats.n_interior << ','
      << est.stats.n_isolated << ',' << format_double(est.hull_area) << ',' << estimate_kind_name(est.kind) << ','
      << format_double(est.value) << '\n';
}

}  // namespace wraphull
