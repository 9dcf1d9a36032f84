#include "wraphull/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wraphull/error.hpp"
#include "wraphull/predicates.hpp"

namespace wraphull {

namespace {

[[noreturn]] void outside(Point p) {
  std::ostringstream os;
  os.precision(17);
  os << "sample point (" << p.x << ", " << p.y << ") lies outside the hull";
  throw Error(ErrorCode::InconsistentHull, os.str());
}

bool sorted_contains(const std::vector<Point>& v, Point p) { return std::binary_search(v.begin(), v.end(), p); }

HullStats classify_convex(const PointSet& points, const ConvexPolygon& hull) {
  HullStats s;
  s.n_total = points.size();
  std::vector<Point> verts = hull.vertices;
  std::sort(verts.begin(), verts.end());
  for (const Point& p : points) {
    if (sorted_contains(verts, p) || hull.on_boundary(p)) ++s.n_boundary;
    else if (hull.contains(p)) ++s.n_interior;
    else outside(p);
  }
  if (hull.area() <= 0.0) s.n_isolated = s.n_boundary;
  return s;
}

HullStats classify_rconvex(const PointSet& points, const ArcPolygon& hull) {
  HullStats s;
  s.n_total = points.size();
  std::vector<Point> cell_vertices;
  cell_vertices.reserve(3 * hull.cells.size());
  for (const auto& c : hull.cells) cell_vertices.insert(cell_vertices.end(), c.begin(), c.end());
  std::sort(cell_vertices.begin(), cell_vertices.end());
  cell_vertices.erase(std::unique(cell_vertices.begin(), cell_vertices.end()), cell_vertices.end());
  for (const Point& p : points) {
    if (sorted_contains(hull.boundary_points, p)) {
      ++s.n_boundary;
      if (sorted_contains(hull.isolated_boundary_points, p)) ++s.n_isolated;
    } else if (sorted_contains(cell_vertices, p) || hull.contains(p)) {
      ++s.n_interior;
    } else {
      outside(p);
    }
  }
  return s;
}

HullStats classify_fixed_normal(const PointSet& points, const HalfspaceHull& hull) {
  HullStats s;
  s.n_total = points.size();
  const double tol = tolerance().distance;
  for (const Point& p : points) {
    bool boundary = false;
    for (std::size_t j = 0; j < hull.normals.size() && !boundary; ++j)
      boundary = std::abs(dot(hull.normals[j], p) - hull.offsets[j]) <= tol;
    if (boundary) ++s.n_boundary;
    else if (hull.contains(p)) ++s.n_interior;
    else outside(p);
  }
  if (hull.area() <= 0.0) s.n_isolated = s.n_boundary;
  return s;
}

HullStats classify_sample(const PointSet& points, const SampleHull& hull) {
  std::vector<Point> sorted = hull.points;
  std::sort(sorted.begin(), sorted.end());
  for (const Point& p : points) {
    if (!sorted_contains(sorted, p)) outside(p);
  }
  return {points.size(), points.size(), 0, points.size()};
}

HullStats classify_interval(const PointSet& points, const IntervalHull& hull) {
  HullStats s;
  s.n_total = points.size();
  for (const Point& p : points) {
    if (p.x == hull.low || p.x == hull.high) ++s.n_boundary;
    else if (hull.contains(p)) ++s.n_interior;
    else outside(p);
  }
  if (hull.high <= hull.low) s.n_isolated = s.n_boundary;
  return s;
}

}  // namespace

HullStats classify(const PointSet& points, const Hull& hull) {
  return std::visit(
      [&](const auto& h) {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, ConvexPolygon>) return classify_convex(points, h);
        else if constexpr (std::is_same_v<T, ArcPolygon>) return classify_rconvex(points, h);
        else if constexpr (std::is_same_v<T, HalfspaceHull>) return classify_fixed_normal(points, h);
        else if constexpr (std::is_same_v<T, SampleHull>) return classify_sample(points, h);
        else return classify_interval(points, h);
      },
      hull);
}

const char* estimate_kind_name(EstimateKind k) {
  switch (k) {
    case EstimateKind::Oracle: return "oracle";
    case EstimateKind::DataDriven: return "data_driven";
    case EstimateKind::CompactOracle: return "compact_oracle";
    case EstimateKind::NaiveHullVolume: return "naive_hull_volume";
    case EstimateKind::PiOpt: return "pi_opt";
    case EstimateKind::PiNaive: return "pi_naive";
  }
  return "unknown";
}

VolumeEstimate oracle_estimate(const HullStats& stats, double hull_area, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "intensity must be positive");
  return {static_cast<double>(stats.n_boundary) / lambda + hull_area, EstimateKind::Oracle, hull_area, stats, lambda};
}

VolumeEstimate data_driven_estimate(const HullStats& stats, double hull_area) {
  const double value = stats.n_total == 0 ? 0.0
                                          : static_cast<double>(stats.n_total + 1) /
                                                static_cast<double>(stats.n_interior + 1) * hull_area;
  return {value, EstimateKind::DataDriven, hull_area, stats, std::nullopt};
}

VolumeEstimate compact_oracle_estimate(std::size_t n_total, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "intensity must be positive");
  HullStats stats{n_total, n_total, 0, n_total};
  return {static_cast<double>(n_total) / lambda, EstimateKind::CompactOracle, 0.0, stats, lambda};
}

VolumeEstimate naive_hull_volume(const HullStats& stats, double hull_area) {
  return {hull_area, EstimateKind::NaiveHullVolume, hull_area, stats, std::nullopt};
}

ConvexPolygon set_estimate_dilated(const PointSet& points) {
  const ConvexPolygon hull = convex_hull(points);
  const HullStats stats = classify(points, hull);
  const double factor = std::sqrt(static_cast<double>(stats.n_total + 1) / static_cast<double>(stats.n_interior + 1));
  return dilate_hull(hull, factor);
}

std::vector<double> LepskiConfig::grid() const {
  validate();
  std::vector<double> g;
  g.reserve(grid_size);
  const double step = (r_max - r_min) / grid_size;
  for (int k = 1; k <= grid_size; ++k) g.push_back(k == grid_size ? r_max : r_min + k * step);
  return g;
}

void LepskiConfig::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min) || grid_size < 2)
    throw Error(ErrorCode::InvalidArgument, "Lepski grid needs 0 < r_min < r_max and K >= 2");
}

const char* kappa_rule_name(KappaRule rule) {
  switch (rule) {
    case KappaRule::BoundarySd: return "boundary-sd";
    case KappaRule::BoundaryAtCurrent: return "boundary-current";
    case KappaRule::BoundaryAtReference: return "boundary-reference";
    case KappaRule::TotalCount: return "total";
  }
  return "unknown";
}

std::optional<KappaRule> parse_kappa_rule(const std::string& name) {
  for (KappaRule r : {KappaRule::BoundarySd, KappaRule::BoundaryAtCurrent, KappaRule::BoundaryAtReference,
                      KappaRule::TotalCount}) {
    if (name == kappa_rule_name(r)) return r;
  }
  return std::nullopt;
}

std::size_t lepski_rule(const std::vector<LepskiStep>& steps, std::size_t n_total, KappaRule rule) {
  if (steps.empty()) throw Error(ErrorCode::InvalidArgument, "empty Lepski grid");
  const double n = n_total == 0 ? 1.0 : static_cast<double>(n_total);
  for (std::size_t k = 1; k < steps.size(); ++k) {
    for (std::size_t kp = 0; kp <= k; ++kp) {
      double kappa = 0.0;
      switch (rule) {
        case KappaRule::BoundarySd:
          kappa = std::sqrt(static_cast<double>(steps[k].stats.n_boundary)) * steps[k].estimate / n;
          break;
        case KappaRule::BoundaryAtCurrent: kappa = static_cast<double>(steps[k].stats.n_boundary) / (n * n); break;
        case KappaRule::BoundaryAtReference: kappa = static_cast<double>(steps[kp].stats.n_boundary) / (n * n); break;
        case KappaRule::TotalCount: kappa = 1.0 / n; break;
      }
      if (std::abs(steps[k].estimate - steps[kp].estimate) > kappa) return k - 1;
    }
  }
  return steps.size() - 1;
}

LepskiResult lepski_select(const PointSet& points, const LepskiConfig& cfg) {
  if (points.empty()) throw Error(ErrorCode::EmptySample, "Lepski selection on an empty sample");
  if (points.dim() != 2) throw Error(ErrorCode::InvalidArgument, "Lepski selection needs a 2-d sample");
  const std::vector<double> grid = cfg.grid();
  const DelaunayTriangulation dt = delaunay(points.points());
  LepskiResult res;
  res.steps.reserve(grid.size());
  for (double r : grid) {
    const Hull hull = r_convex_hull(dt, r);
    const HullStats stats = classify(points, hull);
    const double a = area(hull);
    res.steps.push_back({r, data_driven_estimate(stats, a).value, a, stats});
  }
  res.index = lepski_rule(res.steps, points.size(), cfg.kappa_rule);
  res.r_hat = res.steps[res.index].radius;
  res.estimate = res.steps[res.index].estimate;
  return res;
}

PiEstimates pi_estimators(const PointSet& points_in_square) {
  PiEstimates out;
  out.n_total = points_in_square.size();
  if (out.n_total == 0) throw Error(ErrorCode::EmptySample, "pi estimators on an empty sample");
  std::vector<Point> inside;
  for (const Point& p : points_in_square) {
    if (p.x * p.x + p.y * p.y <= 1.0) inside.push_back(p);
  }
  out.n_inside = inside.size();
  out.pi_naive = 4.0 * static_cast<double>(out.n_inside) / static_cast<double>(out.n_total);
  if (inside.empty()) {
    out.degenerate = true;
    return out;
  }
  const PointSet in_disk(std::move(inside), points_in_square.window());
  const ConvexPolygon hull = convex_hull(in_disk);
  const HullStats stats = classify(in_disk, hull);
  out.n_interior = stats.n_interior;
  out.degenerate = stats.n_interior == 0;
  out.pi_opt = 4.0 * data_driven_estimate(stats, hull.area()).value;
  return out;
}

}  // namespace wraphull
