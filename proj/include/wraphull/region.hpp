#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wraphull/point.hpp"

namespace wraphull {

/// Ground-truth set A with exact membership and exact area.
///
/// Composites carry preconditions that are not checked: the children of a
/// union are pairwise disjoint (up to null sets), and the subtrahend of a
/// difference lies inside its minuend. Under these the area is exact.
class Region {
 public:
  enum class Kind { Disk, Annulus, Polygon, Union, Difference, Interval };

  static Region disk(Point center, double radius, Window window = Window::unit(2));
  static Region annulus(Point center, double r_out, double r_in, Window window = Window::unit(2));
  /// Simple polygon, vertices in either orientation.
  static Region polygon(std::vector<Point> vertices, Window window = Window::unit(2));
  static Region box(double x0, double x1, double y0, double y1, Window window = Window::unit(2));
  static Region make_union(std::vector<Region> children);
  static Region difference(Region minuend, Region subtrahend);
  static Region interval(double a, double b, Window window = Window::unit(1));

  /// Named regions used by the experiments: "annulus" (B(.5,.5)\B(.5,.25)),
  /// "fig1" (the annulus plus the disk B(.5,.1)), "disk" (B(.5,.4)),
  /// "square" (the unit square), "box" ([.2,.8]x[.25,.75]), "octagon"
  /// (regular, circumradius .4, facet normals at multiples of 45 degrees),
  /// "interval" ((0,1) in one dimension).
  static Region named(const std::string& name);
  static std::vector<std::string> names();

  Kind kind() const { return kind_; }
  const Window& window() const { return window_; }
  int dim() const { return window_.dim(); }

  bool contains(Point p) const;
  double exact_area() const;
  /// Axis-aligned bounding box {xmin, xmax, ymin, ymax}, clipped to the window.
  std::array<double, 4> bounding_box() const;
  /// Boundary length (perimeter); for intervals the number of endpoints.
  double boundary_length() const;

  std::string describe() const;

 private:
  Region() = default;

  Kind kind_ = Kind::Disk;
  Window window_;
  Point center_;
  double r_out_ = 0.0;
  double r_in_ = 0.0;
  std::vector<Point> vertices_;
  std::vector<Region> children_;
};

}  // namespace wraphull
