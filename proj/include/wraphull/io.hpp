#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wraphull/estimators.hpp"
#include "wraphull/hulls.hpp"
#include "wraphull/point.hpp"

namespace wraphull {

/// Shortest text that reads back to the same double ("%.17g").
std::string format_double(double v);

/// Points CSV: a header `x,y` (or `x` for a 1-d sample) followed by one point
/// per line. Throws ParseError naming the offending line, and the PointSet
/// errors (duplicates, points outside the window). The window dimension must
/// match the header.
PointSet read_points_csv(std::istream& in, const Window& window);
PointSet read_points_csv_file(const std::string& path, const Window& window);
/// Reads with the unit window of the dimension given by the header.
PointSet read_points_csv(std::istream& in);
void write_points_csv(std::ostream& out, const PointSet& points);

/// Hull geometry text. First line `type,param,area`; then
///   convex, fixed-normal: one vertex `x,y` per line, counter-clockwise;
///   rconvex: `loop,is_hole,x0,y0,x1,y1,cx,cy,radius,bulge` per arc,
///            `-1,0,x,y` per isolated point, `-2,0,x0,y0,x1,y1` per
///            isolated segment;
///   compact: one sample point `x,y` per line;
///   interval: `low,high`.
/// param is r for rconvex, the normal count for fixed-normal and 0 otherwise.
void write_hull_text(std::ostream& out, const Hull& hull);

struct HullText {
  std::string type;
  double param = 0.0;
  double area = 0.0;
  std::vector<Point> vertices;
  std::vector<std::pair<int, ArcEdge>> arcs;  // loop index and edge
  std::vector<int> hole_loops;
  std::vector<Point> isolated_points;
  std::vector<std::pair<Point, Point>> isolated_segments;
  double low = 0.0, high = 0.0;
};
HullText read_hull_text(std::istream& in);

inline constexpr const char* kEstimateCsvHeader =
    "class,r,lambda,n,n_boundary,n_interior,n_isolated,hull_area,estimate_kind,value";
/// One estimate row; r and lambda are left empty when not applicable.
void write_estimate_row(std::ostream& out, HullClass cls, double r, const VolumeEstimate& est);

}  // namespace wraphull
