#include "wraphull/region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wraphull/error.hpp"

namespace wraphull {

namespace {

double polygon_signed_area(const std::vector<Point>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * s;
}

void require_2d(const Window& w) {
  if (w.dim() != 2) throw Error(ErrorCode::InvalidArgument, "region needs a 2-d window");
}

void require_inside(const Window& w, double x0, double x1, double y0, double y1) {
  if (x0 < w.lo(0) || x1 > w.hi(0) || y0 < w.lo(1) || y1 > w.hi(1))
    throw Error(ErrorCode::InvalidArgument, "region must lie inside its window");
}

}  // namespace

Region Region::disk(Point center, double radius, Window window) {
  require_2d(window);
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "disk radius must be positive");
  require_inside(window, center.x - radius, center.x + radius, center.y - radius, center.y + radius);
  Region r;
  r.kind_ = Kind::Disk;
  r.window_ = window;
  r.center_ = center;
  r.r_out_ = radius;
  return r;
}

Region Region::annulus(Point center, double r_out, double r_in, Window window) {
  require_2d(window);
  if (!(r_out > r_in) || !(r_in >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "annulus needs r_out > r_in >= 0");
  require_inside(window, center.x - r_out, center.x + r_out, center.y - r_out, center.y + r_out);
  Region r;
  r.kind_ = Kind::Annulus;
  r.window_ = window;
  r.center_ = center;
  r.r_out_ = r_out;
  r.r_in_ = r_in;
  return r;
}

Region Region::polygon(std::vector<Point> vertices, Window window) {
  require_2d(window);
  if (vertices.size() < 3) throw Error(ErrorCode::InvalidArgument, "polygon needs at least three vertices");
  for (const Point& p : vertices) {
    if (!window.contains(p)) throw Error(ErrorCode::InvalidArgument, "polygon vertex outside the window");
  }
  if (polygon_signed_area(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());
  Region r;
  r.kind_ = Kind::Polygon;
  r.window_ = window;
  r.vertices_ = std::move(vertices);
  return r;
}

Region Region::box(double x0, double x1, double y0, double y1, Window window) {
  if (!(x1 > x0) || !(y1 > y0)) throw Error(ErrorCode::InvalidArgument, "box needs positive extents");
  return polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}, window);
}

Region Region::make_union(std::vector<Region> children) {
  if (children.empty()) throw Error(ErrorCode::InvalidArgument, "union of no regions");
  for (const Region& c : children) {
    if (!(c.window_ == children.front().window_))
      throw Error(ErrorCode::InvalidArgument, "union children must share a window");
  }
  Region r;
  r.kind_ = Kind::Union;
  r.window_ = children.front().window_;
  r.children_ = std::move(children);
  return r;
}

Region Region::difference(Region minuend, Region subtrahend) {
  if (!(minuend.window_ == subtrahend.window_))
    throw Error(ErrorCode::InvalidArgument, "difference operands must share a window");
  Region r;
  r.kind_ = Kind::Difference;
  r.window_ = minuend.window_;
  r.children_ = {std::move(minuend), std::move(subtrahend)};
  return r;
}

Region Region::interval(double a, double b, Window window) {
  if (window.dim() != 1) throw Error(ErrorCode::InvalidArgument, "interval needs a 1-d window");
  if (!(b > a) || a < window.lo(0) || b > window.hi(0))
    throw Error(ErrorCode::InvalidArgument, "interval must be non-empty and inside the window");
  Region r;
  r.kind_ = Kind::Interval;
  r.window_ = window;
  r.center_ = {a, b};
  return r;
}

Region Region::named(const std::string& name) {
  const Point mid{0.5, 0.5};
  if (name == "annulus") return annulus(mid, 0.5, 0.25);
  if (name == "fig1") return make_union({annulus(mid, 0.5, 0.25), disk(mid, 0.1)});
  if (name == "disk") return disk(mid, 0.4);
  if (name == "square") return box(0.0, 1.0, 0.0, 1.0);
  if (name == "box") return box(0.2, 0.8, 0.25, 0.75);
  if (name == "octagon") {
    std::vector<Point> v;
    for (int j = 0; j < 8; ++j) {
      const double a = std::numbers::pi / 8.0 + j * std::numbers::pi / 4.0;
      v.push_back({0.5 + 0.4 * std::cos(a), 0.5 + 0.4 * std::sin(a)});
    }
    return polygon(std::move(v));
  }
  if (name == "interval") return interval(0.0, 1.0);
  throw Error(ErrorCode::InvalidArgument, "unknown region '" + name + "'");
}

std::vector<std::string> Region::names() {
  return {"annulus", "fig1", "disk", "square", "box", "octagon", "interval"};
}

bool Region::contains(Point p) const {
  if (!window_.contains(p)) return false;
  switch (kind_) {
    case Kind::Disk:
      return norm2(p - center_) <= r_out_ * r_out_;
    case Kind::Annulus: {
      const double d2 = norm2(p - center_);
      return d2 <= r_out_ * r_out_ && d2 >= r_in_ * r_in_;
    }
    case Kind::Polygon: {
      bool in = false;
      const std::size_t n = vertices_.size();
      for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = vertices_[i], b = vertices_[j];
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
      }
      return in;
    }
    case Kind::Union:
      return std::any_of(children_.begin(), children_.end(), [p](const Region& c) { return c.contains(p); });
    case Kind::Difference:
      return children_[0].contains(p) && !children_[1].contains(p);
    case Kind::Interval:
      return p.x >= center_.x && p.x <= center_.y;
  }
  return false;
}

double Region::exact_area() const {
  switch (kind_) {
    case Kind::Disk:
      return std::numbers::pi * r_out_ * r_out_;
    case Kind::Annulus:
      return std::numbers::pi * (r_out_ * r_out_ - r_in_ * r_in_);
    case Kind::Polygon:
      return polygon_signed_area(vertices_);
    case Kind::Union: {
      double s = 0.0;
      for (const Region& c : children_) s += c.exact_area();
      return s;
    }
    case Kind::Difference:
      return children_[0].exact_area() - children_[1].exact_area();
    case Kind::Interval:
      return center_.y - center_.x;
  }
  return 0.0;
}

std::array<double, 4> Region::bounding_box() const {
  std::array<double, 4> bb{};
  switch (kind_) {
    case Kind::Disk:
    case Kind::Annulus:
      bb = {center_.x - r_out_, center_.x + r_out_, center_.y - r_out_, center_.y + r_out_};
      break;
    case Kind::Polygon: {
      bb = {vertices_[0].x, vertices_[0].x, vertices_[0].y, vertices_[0].y};
      for (const Point& v : vertices_) {
        bb[0] = std::min(bb[0], v.x);
        bb[1] = std::max(bb[1], v.x);
        bb[2] = std::min(bb[2], v.y);
        bb[3] = std::max(bb[3], v.y);
      }
      break;
    }
    case Kind::Union: {
      bb = children_[0].bounding_box();
      for (const Region& c : children_) {
        const auto b = c.bounding_box();
        bb[0] = std::min(bb[0], b[0]);
        bb[1] = std::max(bb[1], b[1]);
        bb[2] = std::min(bb[2], b[2]);
        bb[3] = std::max(bb[3], b[3]);
      }
      break;
    }
    case Kind::Difference:
      bb = children_[0].bounding_box();
      break;
    case Kind::Interval:
      return {center_.x, center_.y, 0.0, 0.0};
  }
  bb[0] = std::max(bb[0], window_.lo(0));
  bb[1] = std::min(bb[1], window_.hi(0));
  bb[2] = std::max(bb[2], window_.lo(1));
  bb[3] = std::min(bb[3], window_.hi(1));
  return bb;
}

double Region::boundary_length() const {
  switch (kind_) {
    case Kind::Disk:
      return 2.0 * std::numbers::pi * r_out_;
    case Kind::Annulus:
      return 2.0 * std::numbers::pi * (r_out_ + r_in_);
    case Kind::Polygon: {
      double s = 0.0;
      for (std::size_t i = 0; i < vertices_.size(); ++i) s += dist(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
      return s;
    }
    case Kind::Union:
    case Kind::Difference: {
      double s = 0.0;
      for (const Region& c : children_) s += c.boundary_length();
      return s;
    }
    case Kind::Interval:
      return 2.0;
  }
  return 0.0;
}

std::string Region::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::Disk:
      os << "disk(center=(" << center_.x << "," << center_.y << "),r=" << r_out_ << ")";
      break;
    case Kind::Annulus:
      os << "annulus(center=(" << center_.x << "," << center_.y << "),r_out=" << r_out_ << ",r_in=" << r_in_ << ")";
      break;
    case Kind::Polygon:
      os << "polygon(";
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        os << (i ? ";" : "") << vertices_[i].x << " " << vertices_[i].y;
      os << ")";
      break;
    case Kind::Union:
      os << "union(";
      for (std::size_t i = 0; i < children_.size(); ++i) os << (i ? "," : "") << children_[i].describe();
      os << ")";
      break;
    case Kind::Difference:
      os << "difference(" << children_[0].describe() << "," << children_[1].describe() << ")";
      break;
    case Kind::Interval:
      os << "interval(" << center_.x << "," << center_.y << ")";
      break;
  }
  return os.str();
}

}  // namespace wraphull
