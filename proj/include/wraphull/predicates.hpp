#pragma once

#include "wraphull/point.hpp"

namespace wraphull {

/// Tolerances for the geometric predicates, in one place. Defaults are tuned
/// for samples in the unit window.
struct Tolerance {
  /// Relative tolerance applied to orientation and in-circle determinants.
  /// A determinant whose magnitude is below eps times the magnitude of its
  /// largest expansion term is treated as zero.
  double predicate = 1e-12;
  /// Absolute tolerance (window units) for distance based membership tests.
  double distance = 1e-12;
};

Tolerance& tolerance();

/// Sign of twice the signed area of (a, b, c): +1 left turn, -1 right turn,
/// 0 collinear within tolerance.
int orient(Point a, Point b, Point c);
/// Raw determinant of orient, no tolerance.
double orient_det(Point a, Point b, Point c);
/// +1 if d lies strictly inside the circle through the counter-clockwise
/// triangle (a, b, c), -1 if strictly outside, 0 if cocircular within tolerance.
int incircle(Point a, Point b, Point c, Point d);

/// Circumcenter of a non-degenerate triangle.
Point circumcenter(Point a, Point b, Point c);

/// Area of the circular segment cut off by a chord of the given length from a
/// circle of radius r (minor side). Requires chord <= 2r.
double circular_segment_area(double chord, double r);

}  // namespace wraphull
