#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wraphull/delaunay.hpp"
#include "wraphull/point.hpp"

namespace wraphull {

/// Counter-clockwise, strictly convex vertex loop. Degenerate hulls keep
/// their extreme points: one vertex for a single point, two for a segment.
struct ConvexPolygon {
  std::vector<Point> vertices;

  double area() const;
  double perimeter() const;
  /// Area centroid. Throws DegenerateHull for zero-area polygons.
  Point centroid() const;
  /// Closed membership, boundary included within tolerance.
  bool contains(Point p) const;
  /// True if p is a vertex or lies on an edge within tolerance.
  bool on_boundary(Point p) const;
};

/// Side of the directed chord start->end toward which an arc bulges.
enum class Bulge { Left, Right };

struct ArcEdge {
  Point start;
  Point end;
  bool straight = false;
  Point center;
  double radius = 0.0;
  Bulge bulge = Bulge::Left;

  /// Signed area between the arc and its chord, positive when the arc lies to
  /// the right of start->end (outward for a counter-clockwise loop).
  double segment_correction() const;
  /// True if p lies strictly between the chord and the arc.
  bool in_segment(Point p) const;
};

struct ArcLoop {
  std::vector<ArcEdge> edges;
  bool hole = false;

  /// Shoelace over edge endpoints plus the signed segment corrections.
  double signed_area() const;
};

/// r-convex hull: the intersection of the complements of all open r-balls
/// that contain no sample point. Boundary loops keep the hull on their left,
/// so outer loops run counter-clockwise and holes clockwise.
struct ArcPolygon {
  double radius = 0.0;
  std::vector<ArcLoop> loops;
  std::vector<Point> isolated_points;
  std::vector<std::pair<Point, Point>> isolated_segments;

  /// Kept Delaunay triangles (circumradius <= r) and the centers of the empty
  /// supporting r-balls of exposed edges. Together they define membership.
  std::vector<std::array<Point, 3>> cells;
  std::vector<Point> empty_ball_centers;
  /// Sample points on the hull boundary, sorted; the subset that belongs to
  /// no kept triangle (zero-area components) is also kept separately.
  std::vector<Point> boundary_points;
  std::vector<Point> isolated_boundary_points;

  double area() const;
  bool contains(Point p) const;
};

/// Fixed-normal polytope hull {x in window : <u_j, x> <= h_j for all j}.
struct HalfspaceHull {
  std::vector<Point> normals;
  std::vector<double> offsets;
  ConvexPolygon polygon;
  /// Set when the normals do not positively span the plane, in which case
  /// only the window clipping bounds the polygon.
  bool unbounded = false;

  double area() const { return polygon.area(); }
  bool contains(Point p) const;
};

/// Wrapping hull of the class of all compact sets: the sample itself.
struct SampleHull {
  std::vector<Point> points;

  double area() const { return 0.0; }
  bool contains(Point p) const;
};

struct IntervalHull {
  double low = 0.0;
  double high = 0.0;

  double area() const { return high - low; }
  bool contains(Point p) const;
};

enum class HullClass { Convex, RConvex, FixedNormal, Compact, Interval };

const char* hull_class_name(HullClass c);
std::optional<HullClass> parse_hull_class(const std::string& name);

using Hull = std::variant<ConvexPolygon, ArcPolygon, HalfspaceHull, SampleHull, IntervalHull>;

HullClass hull_class(const Hull& h);
double area(const Hull& h);
bool contains(const Hull& h, Point p);

/// Monotone-chain convex hull. Throws EmptySample for an empty set.
ConvexPolygon convex_hull(const PointSet& points);
ConvexPolygon convex_hull(std::span<const Point> points);

/// r-convex hull via the Delaunay triangulation. Throws BadRadius unless r is
/// finite and positive.
ArcPolygon r_convex_hull(const PointSet& points, double r);
/// Same, reusing a triangulation (several radii over one sample).
ArcPolygon r_convex_hull(const DelaunayTriangulation& dt, double r);

enum class UnboundedPolicy { Reject, Flag };

/// `count` unit normals at angles 2*pi*j/count.
std::vector<Point> evenly_spaced_normals(int count);
/// True if the directions positively span the plane.
bool positively_spanning(std::span<const Point> normals);

/// Fixed-normal hull. Throws InvalidArgument for fewer than three normals or
/// non-unit normals, and UnboundedHull for normals that do not positively
/// span the plane unless the policy is Flag.
HalfspaceHull fixed_normal_hull(const PointSet& points, std::span<const Point> normals,
                                UnboundedPolicy policy = UnboundedPolicy::Reject);

SampleHull sample_hull(const PointSet& points);

/// (min, max) of a one-dimensional sample.
IntervalHull interval_hull(const PointSet& points);

/// Dilate about the area centroid. Throws DegenerateHull for a zero-area hull
/// and InvalidArgument for a non-positive factor.
ConvexPolygon dilate_hull(const ConvexPolygon& hull, double factor);

/// Parameters selecting one hull class.
struct HullParams {
  HullClass cls = HullClass::Convex;
  double radius = 0.0;
  int normal_count = 0;
};

Hull build_hull(const PointSet& points, const HullParams& params);

}  // namespace wraphull
