#pragma once

// Independent reference implementations. None of these call into the
// library's geometry code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

struct P {
  double x, y;
};

inline double cross3(P o, P a, P b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline double shoelace(const std::vector<P>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const P& a = v[i];
    const P& b = v[(i + 1) % v.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return 0.5 * s;
}

// Jarvis march. Collinear candidates resolve to the farthest one, so only
// strict corners are returned. Counter-clockwise from the lowest-leftmost point.
inline std::vector<P> gift_wrap(const std::vector<P>& pts) {
  if (pts.size() < 3) return pts;
  std::size_t start = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].y < pts[start].y || (pts[i].y == pts[start].y && pts[i].x < pts[start].x)) start = i;
  std::vector<P> hull;
  std::size_t cur = start;
  do {
    hull.push_back(pts[cur]);
    std::size_t next = cur == 0 ? 1 : 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == cur) continue;
      const double c = cross3(pts[cur], pts[next], pts[i]);
      const double dn = std::hypot(pts[next].x - pts[cur].x, pts[next].y - pts[cur].y);
      const double di = std::hypot(pts[i].x - pts[cur].x, pts[i].y - pts[cur].y);
      if (c < 0 || (c == 0 && di > dn)) next = i;
    }
    cur = next;
  } while (cur != start && hull.size() <= pts.size());
  return hull;
}

// Strictly inside the circle through a, b, c, with a relative margin.
inline bool strictly_in_circumcircle(P a, P b, P c, P d) {
  const long double adx = a.x - d.x, ady = a.y - d.y;
  const long double bdx = b.x - d.x, bdy = b.y - d.y;
  const long double cdx = c.x - d.x, cdy = c.y - d.y;
  const long double ad = adx * adx + ady * ady, bd = bdx * bdx + bdy * bdy, cd = cdx * cdx + cdy * cdy;
  long double det = adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
  const long double orient = (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
  if (orient < 0) det = -det;
  const long double scale = (std::abs(adx) + std::abs(ady)) * (std::abs(bdx) + std::abs(bdy)) * (ad + bd + cd);
  return det > 1e-9L * scale;
}

// Clip a convex polygon by {q : <u, q> <= h}.
inline std::vector<P> clip(const std::vector<P>& poly, P u, double h) {
  std::vector<P> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P a = poly[i];
    const P b = poly[(i + 1) % poly.size()];
    const double fa = u.x * a.x + u.y * a.y - h;
    const double fb = u.x * b.x + u.y * b.y - h;
    if (fa <= 0) out.push_back(a);
    if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
      const double t = fa / (fa - fb);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  return out;
}

// Sutherland-Hodgman: the window [x0,x1]x[y0,y1] clipped by the supporting
// half-planes of the sample in directions 2 pi j / k.
inline double fixed_normal_area(const std::vector<P>& pts, int k, double x0 = 0, double x1 = 1, double y0 = 0,
                                double y1 = 1) {
  std::vector<P> poly{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  for (int j = 0; j < k; ++j) {
    const double a = 2.0 * std::numbers::pi * j / k;
    const P u{std::cos(a), std::sin(a)};
    double h = -std::numeric_limits<double>::infinity();
    for (const P& p : pts) h = std::max(h, u.x * p.x + u.y * p.y);
    poly = clip(poly, u, h);
    if (poly.empty()) return 0.0;
  }
  return std::abs(shoelace(poly));
}

// Exact squared Euclidean distance transform (Felzenszwalb-Huttenlocher),
// one dimension; f holds 0 at seeds and a large value elsewhere.
inline std::vector<double> edt_1d(const std::vector<double>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<double> d(n), z(n + 1);
  std::vector<int> v(n);
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  for (int q = 1; q < n; ++q) {
    double s;
    while (true) {
      s = ((f[q] + double(q) * q) - (f[v[k]] + double(v[k]) * v[k])) / (2.0 * q - 2.0 * v[k]);
      if (s <= z[k] && k > 0) {
        --k;
        continue;
      }
      break;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    d[q] = double(q - v[k]) * (q - v[k]) + f[v[k]];
  }
  return d;
}

struct RasterResult {
  double area = 0.0;         // inside pixels times pixel area
  std::size_t boundary = 0;  // inside pixels with an outside 4-neighbour or vice versa
  double cell_area = 0.0;
};

// r-hull by rasterization. Candidate ball centres sit on the pixel lattice,
// extended past the unit window by r. A centre is empty when no sample point
// is within distance r; a pixel is outside when it is within r of an empty
// centre.
inline RasterResult r_hull_raster(const std::vector<P>& pts, double r, int res) {
  const double h = 1.0 / res;
  const int m = static_cast<int>(std::ceil(r / h)) + 2;
  const int g = res + 2 * m;
  const double big = 1e30;
  std::vector<double> f(static_cast<std::size_t>(g) * g, big);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const double cx = (i - m + 0.5) * h, cy = (j - m + 0.5) * h;
      bool empty = true;
      for (const P& p : pts) {
        const double dx = p.x - cx, dy = p.y - cy;
        if (dx * dx + dy * dy < r * r) {
          empty = false;
          break;
        }
      }
      if (empty) f[static_cast<std::size_t>(i) * g + j] = 0.0;
    }
  }
  // rows then columns
  std::vector<double> col(g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) col[j] = f[static_cast<std::size_t>(i) * g + j];
    const auto d = edt_1d(col);
    for (int j = 0; j < g; ++j) f[static_cast<std::size_t>(i) * g + j] = d[j];
  }
  for (int j = 0; j < g; ++j) {
    for (int i = 0; i < g; ++i) col[i] = f[static_cast<std::size_t>(i) * g + j];
    const auto d = edt_1d(col);
    for (int i = 0; i < g; ++i) f[static_cast<std::size_t>(i) * g + j] = d[i];
  }
  const double lim = (r / h) * (r / h);
  auto inside = [&](int i, int j) { return f[static_cast<std::size_t>(i + m) * g + (j + m)] >= lim; };
  RasterResult out;
  out.cell_area = h * h;
  std::size_t count = 0;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const bool in = inside(i, j);
      count += in;
      bool edge = false;
      const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int t = 0; t < 4; ++t) {
        const int a = i + di[t], b = j + dj[t];
        const bool nb = (a >= 0 && a < res && b >= 0 && b < res) ? inside(a, b) : false;
        if (nb != in) edge = true;
      }
      out.boundary += edge;
    }
  }
  out.area = count * h * h;
  return out;
}

inline std::vector<P> uniform_points(std::mt19937_64& rng, std::size_t n, double x0 = 0, double x1 = 1,
                                     double y0 = 0, double y1 = 1) {
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  std::vector<P> out(n);
  for (auto& p : out) p = {ux(rng), uy(rng)};
  return out;
}

}  // namespace oracle
