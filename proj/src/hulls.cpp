#include "wraphull/hulls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wraphull/error.hpp"
#include "wraphull/predicates.hpp"

namespace wraphull {

namespace {

void require_dim(const PointSet& points, int dim, const char* what) {
  if (points.dim() != dim) {
    std::ostringstream os;
    os << what << " requires a " << dim << "-dimensional sample";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

bool on_segment(Point a, Point b, Point p) {
  if (orient(a, b, p) != 0) return false;
  const double eps = tolerance().distance;
  return p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps &&
         p.y >= std::min(a.y, b.y) - eps && p.y <= std::max(a.y, b.y) + eps;
}

bool in_triangle(const std::array<Point, 3>& t, Point p) {
  return orient(t[0], t[1], p) >= 0 && orient(t[1], t[2], p) >= 0 && orient(t[2], t[0], p) >= 0;
}

// Twice the area of triangle t (counter-clockwise) minus the union of the
// open r-balls around `centers`, by integrating x dy - y dx over the boundary
// of the difference.
double triangle_minus_balls2(const std::array<Point, 3>& t, const std::vector<Point>& centers, double r) {
  const double r2 = r * r;
  auto covered = [&](Point p, std::size_t skip) {
    for (std::size_t j = 0; j < centers.size(); ++j) {
      if (j != skip && norm2(p - centers[j]) < r2) return true;
    }
    return false;
  };
  auto strictly_inside = [&](Point p) {
    return orient_det(t[0], t[1], p) > 0.0 && orient_det(t[1], t[2], p) > 0.0 && orient_det(t[2], t[0], p) > 0.0;
  };
  constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);
  double twice = 0.0;
  std::vector<double> cuts;

  for (int k = 0; k < 3; ++k) {
    const Point p = t[k];
    const Point d = t[(k + 1) % 3] - p;
    cuts.assign({0.0, 1.0});
    const double a = dot(d, d);
    for (const Point& c : centers) {
      const double b = 2.0 * dot(d, p - c);
      const double cc = norm2(p - c) - r2;
      const double disc = b * b - 4.0 * a * cc;
      if (disc <= 0.0) continue;
      const double sq = std::sqrt(disc);
      for (double root : {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)}) {
        if (root > 0.0 && root < 1.0) cuts.push_back(root);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (cuts[i + 1] <= cuts[i]) continue;
      if (covered(p + (0.5 * (cuts[i] + cuts[i + 1])) * d, kNoSkip)) continue;
      twice += cross(p + cuts[i] * d, p + cuts[i + 1] * d);
    }
  }

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  auto wrap = [&](double ang) { return ang < 0.0 ? ang + kTwoPi : ang; };
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const Point c = centers[i];
    cuts.assign({0.0, kTwoPi});
    for (std::size_t j = 0; j < centers.size(); ++j) {
      if (j == i) continue;
      const Point v = centers[j] - c;
      const double d = norm(v);
      if (d <= 0.0 || d >= 2.0 * r) continue;
      const double base = std::atan2(v.y, v.x);
      const double half = std::acos(d / (2.0 * r));
      cuts.push_back(wrap(std::remainder(base - half, kTwoPi)));
      cuts.push_back(wrap(std::remainder(base + half, kTwoPi)));
    }
    for (int k = 0; k < 3; ++k) {
      const Point p = t[k];
      const Point d = t[(k + 1) % 3] - p;
      const double a = dot(d, d);
      const double b = 2.0 * dot(d, p - c);
      const double cc = norm2(p - c) - r2;
      const double disc = b * b - 4.0 * a * cc;
      if (disc <= 0.0) continue;
      const double sq = std::sqrt(disc);
      for (double root : {(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)}) {
        // Balls pass exactly through triangle corners; keep roots that round
        // just past an endpoint so the arc is still split there.
        if (root < -1e-9 || root > 1.0 + 1e-9) continue;
        const Point q = p + std::clamp(root, 0.0, 1.0) * d - c;
        cuts.push_back(wrap(std::atan2(q.y, q.x)));
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double t0 = cuts[k], t1 = cuts[k + 1];
      if (t1 <= t0) continue;
      const double tm = 0.5 * (t0 + t1);
      const Point mid = c + r * Point{std::cos(tm), std::sin(tm)};
      if (!strictly_inside(mid) || covered(mid, i)) continue;
      // The region lies outside the ball, so its boundary runs clockwise here.
      twice -= r2 * (t1 - t0) + r * (c.x * (std::sin(t1) - std::sin(t0)) - c.y * (std::cos(t1) - std::cos(t0)));
    }
  }
  return twice;
}

// Buckets ball centers on a grid so each triangle only meets nearby balls.
class CenterGrid {
 public:
  CenterGrid(const std::vector<Point>& centers, double r) : centers_(centers) {
    if (centers.empty()) return;
    lo_ = hi_ = centers.front();
    for (const Point& c : centers) {
      lo_ = {std::min(lo_.x, c.x), std::min(lo_.y, c.y)};
      hi_ = {std::max(hi_.x, c.x), std::max(hi_.y, c.y)};
    }
    const double extent = std::max(hi_.x - lo_.x, hi_.y - lo_.y);
    size_ = std::max(r, extent / 512.0);
    nx_ = static_cast<int>((hi_.x - lo_.x) / size_) + 1;
    ny_ = static_cast<int>((hi_.y - lo_.y) / size_) + 1;
    buckets_.resize(static_cast<std::size_t>(nx_) * ny_);
    for (std::size_t i = 0; i < centers.size(); ++i) buckets_[bucket(centers[i])].push_back(i);
  }

  // Centers within distance r of the box [a, b], plus possibly a few more.
  void near(Point a, Point b, double r, std::vector<Point>& out) const {
    out.clear();
    if (centers_.empty()) return;
    const int x0 = std::max(0, cell_x(a.x - r)), x1 = std::min(nx_ - 1, cell_x(b.x + r));
    const int y0 = std::max(0, cell_y(a.y - r)), y1 = std::min(ny_ - 1, cell_y(b.y + r));
    for (int ix = x0; ix <= x1; ++ix) {
      for (int iy = y0; iy <= y1; ++iy) {
        for (std::size_t i : buckets_[static_cast<std::size_t>(ix) * ny_ + iy]) {
          const Point c = centers_[i];
          const double dx = std::max({a.x - c.x, 0.0, c.x - b.x});
          const double dy = std::max({a.y - c.y, 0.0, c.y - b.y});
          if (dx * dx + dy * dy < r * r) out.push_back(c);
        }
      }
    }
  }

 private:
  int cell_x(double x) const { return static_cast<int>(std::floor((x - lo_.x) / size_)); }
  int cell_y(double y) const { return static_cast<int>(std::floor((y - lo_.y) / size_)); }
  std::size_t bucket(Point c) const {
    const int ix = std::clamp(cell_x(c.x), 0, nx_ - 1), iy = std::clamp(cell_y(c.y), 0, ny_ - 1);
    return static_cast<std::size_t>(ix) * ny_ + iy;
  }

  const std::vector<Point>& centers_;
  Point lo_{}, hi_{};
  double size_ = 1.0;
  int nx_ = 0, ny_ = 0;
  std::vector<std::vector<std::size_t>> buckets_;
};

double cells_minus_balls(const std::vector<std::array<Point, 3>>& cells, const std::vector<Point>& centers, double r) {
  const CenterGrid grid(centers, r);
  std::vector<Point> near;
  double twice = 0.0;
  for (const auto& t : cells) {
    const Point a{std::min({t[0].x, t[1].x, t[2].x}), std::min({t[0].y, t[1].y, t[2].y})};
    const Point b{std::max({t[0].x, t[1].x, t[2].x}), std::max({t[0].y, t[1].y, t[2].y})};
    grid.near(a, b, r, near);
    if (near.empty())
      twice += orient_det(t[0], t[1], t[2]);
    else
      twice += triangle_minus_balls2(t, near, r);
  }
  return std::max(0.0, 0.5 * twice);
}

// True if the hull has positive area arbitrarily close to `x`: some direction
// leaves x into a kept triangle without entering one of the balls through x.
bool touches_interior(Point x, const std::vector<std::pair<Point, Point>>& sectors, const std::vector<Point>& balls) {
  std::vector<double> cuts;
  auto ang = [](Point v) { return std::atan2(v.y, v.x); };
  for (const auto& [u, v] : sectors) {
    cuts.push_back(ang(u - x));
    cuts.push_back(ang(v - x));
  }
  const double quarter = 0.5 * std::numbers::pi;
  for (const Point& c : balls) {
    const double a = ang(c - x);
    cuts.push_back(std::remainder(a + quarter, 2.0 * std::numbers::pi));
    cuts.push_back(std::remainder(a - quarter, 2.0 * std::numbers::pi));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(cuts.front() + 2.0 * std::numbers::pi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-12) continue;
    const double m = 0.5 * (cuts[i] + cuts[i + 1]);
    const Point dir{std::cos(m), std::sin(m)};
    bool in_sector = false;
    for (const auto& [u, v] : sectors) {
      if (cross(u - x, dir) > 0.0 && cross(dir, v - x) > 0.0) {
        in_sector = true;
        break;
      }
    }
    if (!in_sector) continue;
    bool blocked = false;
    for (const Point& c : balls) {
      if (dot(dir, c - x) >= 0.0) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- convex

double ConvexPolygon::area() const {
  const std::size_t n = vertices.size();
  if (n < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += cross(vertices[i], vertices[(i + 1) % n]);
  return 0.5 * s;
}

double ConvexPolygon::perimeter() const {
  const std::size_t n = vertices.size();
  if (n < 2) return 0.0;
  if (n == 2) return 2.0 * dist(vertices[0], vertices[1]);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += dist(vertices[i], vertices[(i + 1) % n]);
  return s;
}

Point ConvexPolygon::centroid() const {
  const double a = area();
  if (!(a > 0.0)) throw Error(ErrorCode::DegenerateHull, "centroid of a zero-area hull");
  // Relative to the first vertex for accuracy.
  const Point o = vertices[0];
  double cx = 0.0, cy = 0.0, twice = 0.0;
  for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
    const Point p = vertices[i] - o;
    const Point q = vertices[i + 1] - o;
    const double w = cross(p, q);
    twice += w;
    cx += w * (p.x + q.x);
    cy += w * (p.y + q.y);
  }
  return {o.x + cx / (3.0 * twice), o.y + cy / (3.0 * twice)};
}

bool ConvexPolygon::contains(Point p) const {
  const std::size_t n = vertices.size();
  if (n == 0) return false;
  if (n == 1) return dist(vertices[0], p) <= tolerance().distance;
  if (n == 2) return on_segment(vertices[0], vertices[1], p);
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices[i], b = vertices[(i + 1) % n];
    if (orient(a, b, p) >= 0) continue;
    // signed distance to the edge line; vertices carry rounding error
    if (orient_det(a, b, p) / dist(a, b) < -tolerance().distance) return false;
  }
  return true;
}

bool ConvexPolygon::on_boundary(Point p) const {
  const std::size_t n = vertices.size();
  if (n == 0) return false;
  if (n == 1) return dist(vertices[0], p) <= tolerance().distance;
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i] == p) return true;
    if (on_segment(vertices[i], vertices[(i + 1) % n], p)) return true;
  }
  return false;
}

ConvexPolygon convex_hull(std::span<const Point> input) {
  if (input.empty()) throw Error(ErrorCode::EmptySample, "convex hull of an empty sample");
  std::vector<Point> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return {pts};

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return {hull};
}

ConvexPolygon convex_hull(const PointSet& points) {
  require_dim(points, 2, "convex_hull");
  return convex_hull(std::span<const Point>(points.points()));
}

ConvexPolygon dilate_hull(const ConvexPolygon& hull, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw Error(ErrorCode::InvalidArgument, "dilation factor must be finite and positive");
  const Point c = hull.centroid();
  ConvexPolygon out;
  out.vertices.reserve(hull.vertices.size());
  for (const Point& v : hull.vertices) out.vertices.push_back(c + factor * (v - c));
  return out;
}

// ---------------------------------------------------------------- arcs

double ArcEdge::segment_correction() const {
  if (straight) return 0.0;
  const double chord = dist(start, end);
  double a = circular_segment_area(chord, radius);
  const bool center_left = orient_det(start, end, center) > 0.0;
  const bool bulge_left = bulge == Bulge::Left;
  if (center_left == bulge_left) a = std::numbers::pi * radius * radius - a;
  return bulge_left ? -a : a;
}

bool ArcEdge::in_segment(Point p) const {
  if (straight) return false;
  if (dist(p, center) >= radius - tolerance().distance) return false;
  const int side = orient(start, end, p);
  return bulge == Bulge::Left ? side > 0 : side < 0;
}

double ArcLoop::signed_area() const {
  double s = 0.0;
  double corr = 0.0;
  for (const ArcEdge& e : edges) {
    s += cross(e.start, e.end);
    corr += e.segment_correction();
  }
  return 0.5 * s + corr;
}

double ArcPolygon::area() const { return cells_minus_balls(cells, empty_ball_centers, radius); }

bool ArcPolygon::contains(Point p) const {
  if (std::binary_search(boundary_points.begin(), boundary_points.end(), p)) return true;
  bool inside = false;
  for (const auto& c : cells) {
    if (in_triangle(c, p)) {
      inside = true;
      break;
    }
  }
  if (!inside) return false;
  const double limit = radius - tolerance().distance;
  for (const Point& c : empty_ball_centers) {
    if (dist(p, c) < limit) return false;
  }
  return true;
}

ArcPolygon r_convex_hull(const PointSet& points, double r) {
  require_dim(points, 2, "r_convex_hull");
  if (!std::isfinite(r) || !(r > 0.0)) throw Error(ErrorCode::BadRadius, "radius must be finite and positive");
  return r_convex_hull(delaunay(points.points()), r);
}

ArcPolygon r_convex_hull(const DelaunayTriangulation& dt, double r) {
  if (!std::isfinite(r) || !(r > 0.0)) throw Error(ErrorCode::BadRadius, "radius must be finite and positive");
  constexpr int kNone = DelaunayTriangulation::kNone;
  const auto& sites = dt.sites;
  const std::size_t nsites = sites.size();

  ArcPolygon hull;
  hull.radius = r;

  std::vector<char> kept(dt.triangles.size(), 0);
  std::vector<char> in_cell(nsites, 0);
  for (std::size_t t = 0; t < dt.triangles.size(); ++t) {
    const auto& tri = dt.triangles[t];
    if (tri.circumradius <= r) {
      kept[t] = 1;
      hull.cells.push_back({sites[tri.v[0]], sites[tri.v[1]], sites[tri.v[2]]});
      for (int v : tri.v) in_cell[v] = 1;
    }
  }
  auto is_kept = [&](int t) { return t != kNone && kept[t]; };

  std::vector<std::vector<Point>> site_balls(nsites);
  std::vector<char> on_boundary(nsites, 0);
  std::vector<char> has_exposed(nsites, 0);
  // Directed boundary half-edges of the kept region, kept side on the left.
  struct HalfEdge {
    int from, to, tri;
    Point center;
  };
  std::vector<HalfEdge> half_edges;

  for (const auto& e : dt.edges) {
    const Point a = sites[e.a];
    const Point b = sites[e.b];
    const double len = dist(a, b);
    if (len > 2.0 * r) continue;
    const Point m = 0.5 * (a + b);
    const Point n = (1.0 / len) * Point{-(b.y - a.y), b.x - a.x};  // left normal of a->b
    const double offset = std::sqrt(std::max(0.0, r * r - 0.25 * len * len));
    const Point left_center = m + offset * n;
    const Point right_center = m - offset * n;

    const bool lk = is_kept(e.left);
    const bool rk = is_kept(e.right);
    bool left_exposed = false, right_exposed = false;
    if (lk && rk) continue;
    if (lk != rk) {
      // An edge between a kept and a discarded triangle is always exposed on
      // the discarded side.
      (lk ? right_exposed : left_exposed) = true;
      if (lk)
        half_edges.push_back({e.a, e.b, e.left, right_center});
      else
        half_edges.push_back({e.b, e.a, e.right, left_center});
    } else {
      // Voronoi edge of a-b spans [lo, hi] along the left normal.
      const double inf = std::numeric_limits<double>::infinity();
      const double hi = e.left == kNone ? inf : dot(dt.triangles[e.left].circumcenter - m, n);
      const double lo = e.right == kNone ? -inf : dot(dt.triangles[e.right].circumcenter - m, n);
      left_exposed = lo <= offset && offset <= hi;
      right_exposed = lo <= -offset && -offset <= hi;
      if (!left_exposed && !right_exposed) continue;
      hull.isolated_segments.emplace_back(a, b);
    }
    for (const auto& [exposed, c] : {std::pair{left_exposed, left_center}, std::pair{right_exposed, right_center}}) {
      if (!exposed) continue;
      hull.empty_ball_centers.push_back(c);
      site_balls[e.a].push_back(c);
      site_balls[e.b].push_back(c);
    }
    on_boundary[e.a] = on_boundary[e.b] = 1;
    has_exposed[e.a] = has_exposed[e.b] = 1;
  }

  for (std::size_t i = 0; i < nsites; ++i) {
    if (!has_exposed[i] && !in_cell[i]) {
      on_boundary[i] = 1;
      hull.isolated_points.push_back(sites[i]);
    }
    if (on_boundary[i]) hull.boundary_points.push_back(sites[i]);
  }
  // A boundary point is isolated when no positive-area part of the hull
  // reaches it, either because it lies on no kept triangle or because the
  // empty balls through it swallow every kept triangle near it.
  std::vector<std::vector<std::pair<Point, Point>>> sectors(nsites);
  for (std::size_t t = 0; t < dt.triangles.size(); ++t) {
    if (!kept[t]) continue;
    const auto& v = dt.triangles[t].v;
    for (int j = 0; j < 3; ++j) {
      if (on_boundary[v[j]]) sectors[v[j]].emplace_back(sites[v[(j + 1) % 3]], sites[v[(j + 2) % 3]]);
    }
  }
  for (std::size_t i = 0; i < nsites; ++i) {
    if (on_boundary[i] && (!in_cell[i] || !touches_interior(sites[i], sectors[i], site_balls[i])))
      hull.isolated_boundary_points.push_back(sites[i]);
  }
  std::sort(hull.boundary_points.begin(), hull.boundary_points.end());
  std::sort(hull.isolated_boundary_points.begin(), hull.isolated_boundary_points.end());

  // Chain half-edges into loops. From the end vertex of a half-edge, rotate
  // counter-clockwise through the kept fan until a discarded side appears.
  std::vector<std::pair<std::pair<int, int>, std::size_t>> by_key;
  by_key.reserve(half_edges.size());
  for (std::size_t i = 0; i < half_edges.size(); ++i)
    by_key.push_back({{half_edges[i].from, half_edges[i].to}, i});
  std::sort(by_key.begin(), by_key.end());
  auto find_half_edge = [&](int from, int to) -> std::size_t {
    auto it = std::lower_bound(by_key.begin(), by_key.end(), std::make_pair(std::make_pair(from, to), std::size_t{0}));
    if (it == by_key.end() || it->first != std::make_pair(from, to))
      throw Error(ErrorCode::InconsistentHull, "r_convex_hull: broken boundary chain");
    return it->second;
  };

  std::vector<char> used(half_edges.size(), 0);
  for (std::size_t start = 0; start < half_edges.size(); ++start) {
    if (used[start]) continue;
    ArcLoop loop;
    double shoelace = 0.0;
    std::size_t cur = start;
    while (!used[cur]) {
      used[cur] = 1;
      const HalfEdge& h = half_edges[cur];
      ArcEdge arc;
      arc.start = sites[h.from];
      arc.end = sites[h.to];
      arc.center = h.center;
      arc.radius = r;
      arc.bulge = Bulge::Left;
      loop.edges.push_back(arc);
      shoelace += cross(arc.start, arc.end);

      const int v = h.to;
      int t = h.tri;
      int next_to = -1;
      for (std::size_t guard = 0; guard <= dt.triangles.size(); ++guard) {
        const auto& tri = dt.triangles[t];
        const int j = tri.v[0] == v ? 0 : (tri.v[1] == v ? 1 : 2);
        const int nb = tri.adj[(j + 2) % 3];
        if (!is_kept(nb)) {
          next_to = tri.v[(j + 1) % 3];
          break;
        }
        t = nb;
      }
      if (next_to < 0) throw Error(ErrorCode::InconsistentHull, "r_convex_hull: unterminated fan walk");
      cur = find_half_edge(v, next_to);
    }
    loop.hole = shoelace < 0.0;
    hull.loops.push_back(std::move(loop));
  }
  return hull;
}

// ---------------------------------------------------------------- fixed normals

std::vector<Point> evenly_spaced_normals(int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "normal count must be positive");
  std::vector<Point> out;
  out.reserve(count);
  for (int j = 0; j < count; ++j) {
    const double a = 2.0 * std::numbers::pi * j / count;
    Point u{std::cos(a), std::sin(a)};
    if (std::abs(u.x) < 1e-15) u.x = 0.0;
    if (std::abs(u.y) < 1e-15) u.y = 0.0;
    out.push_back(u);
  }
  return out;
}

bool positively_spanning(std::span<const Point> normals) {
  if (normals.size() < 3) return false;
  std::vector<double> ang;
  ang.reserve(normals.size());
  for (const Point& u : normals) ang.push_back(std::atan2(u.y, u.x));
  std::sort(ang.begin(), ang.end());
  double max_gap = ang.front() + 2.0 * std::numbers::pi - ang.back();
  for (std::size_t i = 1; i < ang.size(); ++i) max_gap = std::max(max_gap, ang[i] - ang[i - 1]);
  return max_gap < std::numbers::pi - 1e-12;
}

bool HalfspaceHull::contains(Point p) const { return polygon.contains(p); }

HalfspaceHull fixed_normal_hull(const PointSet& points, std::span<const Point> normals, UnboundedPolicy policy) {
  require_dim(points, 2, "fixed_normal_hull");
  if (points.empty()) throw Error(ErrorCode::EmptySample, "fixed-normal hull of an empty sample");
  if (normals.size() < 3) throw Error(ErrorCode::InvalidArgument, "fixed-normal hull needs at least three normals");
  for (const Point& u : normals) {
    if (!(std::abs(norm(u) - 1.0) <= 1e-12)) throw Error(ErrorCode::InvalidArgument, "normals must have unit length");
  }
  HalfspaceHull hull;
  hull.normals.assign(normals.begin(), normals.end());
  hull.unbounded = !positively_spanning(normals);
  if (hull.unbounded && policy == UnboundedPolicy::Reject)
    throw Error(ErrorCode::UnboundedHull, "normals do not positively span the plane");

  hull.offsets.reserve(normals.size());
  for (const Point& u : normals) {
    double h = -std::numeric_limits<double>::infinity();
    for (const Point& p : points) h = std::max(h, dot(u, p));
    hull.offsets.push_back(h);
  }

  // Vertex enumeration: every feasible pairwise intersection of constraint
  // lines (sample halfplanes plus the window box), then their convex hull.
  const Window& w = points.window();
  std::vector<Point> us(hull.normals);
  std::vector<double> hs(hull.offsets);
  us.insert(us.end(), {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}});
  hs.insert(hs.end(), {w.hi(0), -w.lo(0), w.hi(1), -w.lo(1)});
  constexpr double kFeasible = 1e-9;
  std::vector<Point> verts;
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const double det = cross(us[i], us[j]);
      if (std::abs(det) < 1e-12) continue;
      const Point x{(hs[i] * us[j].y - hs[j] * us[i].y) / det, (us[i].x * hs[j] - us[j].x * hs[i]) / det};
      bool ok = true;
      for (std::size_t k = 0; k < us.size() && ok; ++k) ok = dot(us[k], x) <= hs[k] + kFeasible;
      if (ok) verts.push_back(x);
    }
  }
  // Merge numerically coincident vertices before hulling.
  std::sort(verts.begin(), verts.end());
  std::vector<Point> merged;
  for (const Point& v : verts) {
    bool dup = false;
    for (const Point& m : merged) {
      if (dist(m, v) <= 1e-11) {
        dup = true;
        break;
      }
    }
    if (!dup) merged.push_back(v);
  }
  if (merged.empty()) throw Error(ErrorCode::InconsistentHull, "empty fixed-normal polygon");
  hull.polygon = convex_hull(std::span<const Point>(merged));
  return hull;
}

// ---------------------------------------------------------------- others

bool SampleHull::contains(Point p) const {
  return std::find(points.begin(), points.end(), p) != points.end();
}

SampleHull sample_hull(const PointSet& points) { return {points.points()}; }

bool IntervalHull::contains(Point p) const { return p.x >= low && p.x <= high; }

IntervalHull interval_hull(const PointSet& points) {
  require_dim(points, 1, "interval_hull");
  if (points.empty()) throw Error(ErrorCode::EmptySample, "interval hull of an empty sample");
  auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                      [](const Point& a, const Point& b) { return a.x < b.x; });
  return {lo->x, hi->x};
}

const char* hull_class_name(HullClass c) {
  switch (c) {
    case HullClass::Convex: return "convex";
    case HullClass::RConvex: return "rconvex";
    case HullClass::FixedNormal: return "fixed-normal";
    case HullClass::Compact: return "compact";
    case HullClass::Interval: return "interval";
  }
  return "unknown";
}

std::optional<HullClass> parse_hull_class(const std::string& name) {
  for (HullClass c : {HullClass::Convex, HullClass::RConvex, HullClass::FixedNormal, HullClass::Compact,
                      HullClass::Interval}) {
    if (name == hull_class_name(c)) return c;
  }
  return std::nullopt;
}

HullClass hull_class(const Hull& h) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>) return HullClass::Convex;
        else if constexpr (std::is_same_v<T, ArcPolygon>) return HullClass::RConvex;
        else if constexpr (std::is_same_v<T, HalfspaceHull>) return HullClass::FixedNormal;
        else if constexpr (std::is_same_v<T, SampleHull>) return HullClass::Compact;
        else return HullClass::Interval;
      },
      h);
}

double area(const Hull& h) {
  return std::visit([](const auto& x) { return x.area(); }, h);
}

bool contains(const Hull& h, Point p) {
  return std::visit([p](const auto& x) { return x.contains(p); }, h);
}

Hull build_hull(const PointSet& points, const HullParams& params) {
  switch (params.cls) {
    case HullClass::Convex: return convex_hull(points);
    case HullClass::RConvex: return r_convex_hull(points, params.radius);
    case HullClass::FixedNormal: {
      const auto normals = evenly_spaced_normals(params.normal_count);
      return fixed_normal_hull(points, normals);
    }
    case HullClass::Compact: return sample_hull(points);
    case HullClass::Interval: return interval_hull(points);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown hull class");
}

}  // namespace wraphull
