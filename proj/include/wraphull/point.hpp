#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace wraphull {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

/// Axis-aligned observation window E. Defaults to the unit square.
class Window {
 public:
  Window() = default;
  explicit Window(int dim);
  Window(int dim, std::array<double, 2> lo, std::array<double, 2> hi);

  static Window unit(int dim) { return Window(dim); }

  int dim() const { return dim_; }
  double lo(int axis) const { return lo_[axis]; }
  double hi(int axis) const { return hi_[axis]; }
  double extent(int axis) const { return hi_[axis] - lo_[axis]; }
  double volume() const;
  double diameter() const;
  bool contains(Point p) const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  int dim_ = 2;
  std::array<double, 2> lo_{0.0, 0.0};
  std::array<double, 2> hi_{1.0, 1.0};
};

/// Observed sample inside a window. Coordinates are finite, inside the
/// window and pairwise distinct; construction throws otherwise. For
/// one-dimensional windows only Point::x is meaningful and y is zero.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::vector<Point> points, Window window);

  static PointSet from_1d(std::span<const double> xs, Window window = Window::unit(1));

  const std::vector<Point>& points() const { return points_; }
  const Window& window() const { return window_; }
  int dim() const { return window_.dim(); }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point> points_;
  Window window_;
};

}  // namespace wraphull
