#include "wraphull/point.hpp"

#include <algorithm>
#include <sstream>

#include "wraphull/error.hpp"

namespace wraphull {

Window::Window(int dim) : Window(dim, {0.0, 0.0}, {1.0, 1.0}) {}

Window::Window(int dim, std::array<double, 2> lo, std::array<double, 2> hi)
    : dim_(dim), lo_(lo), hi_(hi) {
  if (dim != 1 && dim != 2)
    throw Error(ErrorCode::InvalidArgument, "window dimension must be 1 or 2");
  if (dim == 1) {
    lo_[1] = 0.0;
    hi_[1] = 1.0;
  }
  for (int a = 0; a < dim; ++a) {
    if (!std::isfinite(lo_[a]) || !std::isfinite(hi_[a]) || !(hi_[a] > lo_[a]))
      throw Error(ErrorCode::InvalidArgument, "window bounds must be finite with positive length");
  }
}

double Window::volume() const {
  return dim_ == 1 ? extent(0) : extent(0) * extent(1);
}

double Window::diameter() const {
  return dim_ == 1 ? extent(0) : std::hypot(extent(0), extent(1));
}

bool Window::contains(Point p) const {
  if (p.x < lo_[0] || p.x > hi_[0]) return false;
  if (dim_ == 1) return p.y == 0.0;
  return p.y >= lo_[1] && p.y <= hi_[1];
}

PointSet::PointSet(std::vector<Point> points, Window window)
    : points_(std::move(points)), window_(window) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      std::ostringstream os;
      os << "point " << i << " has a non-finite coordinate";
      throw Error(ErrorCode::InvalidArgument, os.str());
    }
    if (!window_.contains(p)) {
      std::ostringstream os;
      os.precision(17);
      os << "point " << i << " (" << p.x << ", " << p.y << ") lies outside the window";
      throw Error(ErrorCode::PointOutsideWindow, os.str());
    }
  }
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    std::ostringstream os;
    os.precision(17);
    os << "duplicate point (" << dup->x << ", " << dup->y << ")";
    throw Error(ErrorCode::DuplicatePoint, os.str());
  }
}

PointSet PointSet::from_1d(std::span<const double> xs, Window window) {
  if (window.dim() != 1) throw Error(ErrorCode::InvalidArgument, "from_1d needs a 1-d window");
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (double x : xs) pts.push_back({x, 0.0});
  return PointSet(std::move(pts), window);
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::BadRadius: return "BadRadius";
    case ErrorCode::UnboundedHull: return "UnboundedHull";
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::InconsistentHull: return "InconsistentHull";
    case ErrorCode::ZeroMeasure: return "ZeroMeasure";
    case ErrorCode::EmptyAggregate: return "EmptyAggregate";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::PointOutsideWindow: return "PointOutsideWindow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::CellFailed: return "CellFailed";
  }
  return "Unknown";
}

}  // namespace wraphull
