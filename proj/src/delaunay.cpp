#include "wraphull/delaunay.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "wraphull/error.hpp"
#include "wraphull/predicates.hpp"

namespace wraphull {
namespace {

constexpr int kGhost = -1;

struct WorkTri {
  std::array<int, 3> v;
  std::array<int, 3> adj;
  bool alive = true;
};

bool has_ghost(const WorkTri& t) { return t.v[0] == kGhost || t.v[1] == kGhost || t.v[2] == kGhost; }

// Rotate so that the ghost vertex (if any) sits at index 2.
void normalize(WorkTri& t) {
  while (has_ghost(t) && t.v[2] != kGhost) {
    std::rotate(t.v.begin(), t.v.begin() + 1, t.v.end());
    std::rotate(t.adj.begin(), t.adj.begin() + 1, t.adj.end());
  }
}

std::uint64_t hilbert_index(std::uint32_t x, std::uint32_t y, int order) {
  const std::uint32_t n = 1u << order;
  std::uint64_t d = 0;
  for (std::uint32_t s = n / 2; s > 0; s /= 2) {
    const std::uint32_t rx = (x & s) ? 1 : 0;
    const std::uint32_t ry = (y & s) ? 1 : 0;
    d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = n - 1 - x;
        y = n - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

std::vector<int> hilbert_order(std::span<const Point> pts) {
  double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (const Point& p : pts) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-300});
  constexpr int kOrder = 16;
  const double scale = ((1u << kOrder) - 1) / span;
  std::vector<std::pair<std::uint64_t, int>> keys(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto hx = static_cast<std::uint32_t>((pts[i].x - minx) * scale);
    auto hy = static_cast<std::uint32_t>((pts[i].y - miny) * scale);
    keys[i] = {hilbert_index(hx, hy, kOrder), static_cast<int>(i)};
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> order(pts.size());
  for (std::size_t i = 0; i < keys.size(); ++i) order[i] = keys[i].second;
  return order;
}

class Builder {
 public:
  explicit Builder(std::span<const Point> pts) : pts_(pts) {}

  DelaunayTriangulation run();

 private:
  bool in_conflict(const WorkTri& t, Point p) const;
  int locate(Point p);
  int brute_force_conflict(Point p) const;
  void insert(int site);
  int new_tri(const WorkTri& t);
  void link_all(std::span<const int> ids);

  std::span<const Point> pts_;
  std::vector<WorkTri> tris_;
  std::vector<int> free_;
  std::vector<int> mark_;
  int stamp_ = 0;
  int last_ = 0;
  std::uint32_t walk_rng_ = 12345u;
};

bool Builder::in_conflict(const WorkTri& t, Point p) const {
  if (t.v[2] == kGhost) {
    const Point a = pts_[t.v[0]];
    const Point b = pts_[t.v[1]];
    const int o = orient(a, b, p);
    if (o > 0) return true;
    if (o < 0) return false;
    return dot(p - a, b - a) > 0.0 && dot(p - b, a - b) > 0.0;
  }
  return incircle(pts_[t.v[0]], pts_[t.v[1]], pts_[t.v[2]], p) > 0;
}

int Builder::new_tri(const WorkTri& t) {
  if (!free_.empty()) {
    const int id = free_.back();
    free_.pop_back();
    tris_[id] = t;
    return id;
  }
  tris_.push_back(t);
  mark_.push_back(0);
  return static_cast<int>(tris_.size()) - 1;
}

int Builder::locate(Point p) {
  int t = last_;
  if (!tris_[t].alive) {
    t = 0;
    while (!tris_[t].alive) ++t;
  }
  if (tris_[t].v[2] == kGhost) t = tris_[t].adj[2];
  const std::size_t max_steps = 4 * tris_.size() + 16;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const WorkTri& tri = tris_[t];
    if (tri.v[2] == kGhost) return t;
    walk_rng_ = walk_rng_ * 1664525u + 1013904223u;
    const int start = static_cast<int>((walk_rng_ >> 16) % 3);
    int next = -1;
    for (int k = 0; k < 3; ++k) {
      const int i = (start + k) % 3;
      const Point a = pts_[tri.v[(i + 1) % 3]];
      const Point b = pts_[tri.v[(i + 2) % 3]];
      if (orient_det(a, b, p) < 0.0) {
        next = tri.adj[i];
        break;
      }
    }
    if (next < 0) return t;
    t = next;
  }
  return brute_force_conflict(p);
}

int Builder::brute_force_conflict(Point p) const {
  int ghost = -1;
  for (std::size_t i = 0; i < tris_.size(); ++i) {
    const WorkTri& t = tris_[i];
    if (!t.alive || !in_conflict(t, p)) continue;
    if (t.v[2] != kGhost) return static_cast<int>(i);
    if (ghost < 0) ghost = static_cast<int>(i);
  }
  return ghost;
}

void Builder::link_all(std::span<const int> ids) {
  for (int id : ids) {
    for (int i = 0; i < 3; ++i) {
      const int a = tris_[id].v[(i + 1) % 3];
      const int b = tris_[id].v[(i + 2) % 3];
      for (int other : ids) {
        if (other == id) continue;
        for (int j = 0; j < 3; ++j) {
          if (tris_[other].v[(j + 1) % 3] == b && tris_[other].v[(j + 2) % 3] == a) tris_[id].adj[i] = other;
        }
      }
    }
  }
}

void Builder::insert(int site) {
  const Point p = pts_[site];
  int seed = locate(p);
  if (seed < 0 || !in_conflict(tris_[seed], p)) seed = brute_force_conflict(p);
  if (seed < 0) throw Error(ErrorCode::InvalidArgument, "delaunay: no conflict region for inserted site");

  std::vector<int> cavity;
  auto grow = [&](int from) {
    ++stamp_;
    cavity.clear();
    cavity.push_back(from);
    mark_[from] = stamp_;
    for (std::size_t k = 0; k < cavity.size(); ++k) {
      for (int n : tris_[cavity[k]].adj) {
        if (mark_[n] == stamp_ || !in_conflict(tris_[n], p)) continue;
        mark_[n] = stamp_;
        cavity.push_back(n);
      }
    }
  };
  grow(seed);

  struct Boundary {
    int u, w, outside, old;
  };
  std::vector<Boundary> boundary;
  // Shrink the cavity until every real boundary edge is visible from p, so the
  // new fan is a valid triangulation even when the predicates were decided
  // within tolerance.
  for (;;) {
    boundary.clear();
    int bad = -1;
    for (int t : cavity) {
      for (int i = 0; i < 3 && bad < 0; ++i) {
        const int n = tris_[t].adj[i];
        if (mark_[n] == stamp_) continue;
        const int u = tris_[t].v[(i + 1) % 3];
        const int w = tris_[t].v[(i + 2) % 3];
        if (u != kGhost && w != kGhost && orient(pts_[u], pts_[w], p) <= 0) bad = t;
        boundary.push_back({u, w, n, t});
      }
      if (bad >= 0) break;
    }
    if (bad < 0) break;
    // Rebuild the cavity without the offending triangle, keeping it connected.
    std::vector<int> keep;
    for (int t : cavity)
      if (t != bad) keep.push_back(t);
    if (keep.empty()) throw Error(ErrorCode::InvalidArgument, "delaunay: degenerate cavity");
    const int root = (bad == seed) ? keep.front() : seed;
    seed = root;
    ++stamp_;
    for (int t : keep) mark_[t] = -stamp_;
    cavity.assign(1, root);
    mark_[root] = stamp_;
    for (std::size_t k = 0; k < cavity.size(); ++k) {
      for (int n : tris_[cavity[k]].adj) {
        if (mark_[n] != -stamp_) continue;
        mark_[n] = stamp_;
        cavity.push_back(n);
      }
    }
  }

  std::vector<int> created;
  created.reserve(boundary.size());
  std::vector<std::pair<int, int>> start_of;  // (vertex, new triangle)
  start_of.reserve(boundary.size());
  for (const Boundary& e : boundary) {
    const int id = new_tri(WorkTri{{e.u, e.w, site}, {-1, -1, e.outside}, true});
    WorkTri& out = tris_[e.outside];
    for (int j = 0; j < 3; ++j) {
      if (out.v[(j + 1) % 3] == e.w && out.v[(j + 2) % 3] == e.u) out.adj[j] = id;
    }
    created.push_back(id);
    start_of.emplace_back(e.u, id);
  }
  std::sort(start_of.begin(), start_of.end());
  for (int id : created) {
    const int w = tris_[id].v[1];
    auto it = std::lower_bound(start_of.begin(), start_of.end(), std::make_pair(w, -1));
    if (it == start_of.end() || it->first != w) throw Error(ErrorCode::InvalidArgument, "delaunay: open cavity boundary");
    tris_[id].adj[0] = it->second;
    tris_[it->second].adj[1] = id;
  }
  for (int t : cavity) {
    tris_[t].alive = false;
    free_.push_back(t);
  }
  for (int id : created) {
    normalize(tris_[id]);
    if (tris_[id].v[2] != kGhost) last_ = id;
  }
}

DelaunayTriangulation Builder::run() {
  DelaunayTriangulation dt;
  dt.sites.assign(pts_.begin(), pts_.end());
  const int n = static_cast<int>(pts_.size());
  if (n < 2) return dt;

  const std::vector<int> order = hilbert_order(pts_);
  const int a = order[0];
  const int b = order[1];
  int c = -1;
  int c_pos = -1;
  for (int k = 2; k < n; ++k) {
    if (orient(pts_[a], pts_[b], pts_[order[k]]) != 0) {
      c = order[k];
      c_pos = k;
      break;
    }
  }
  if (c < 0) {
    std::vector<int> line(order);
    std::sort(line.begin(), line.end(), [&](int i, int j) { return pts_[i] < pts_[j]; });
    for (int k = 0; k + 1 < n; ++k)
      dt.edges.push_back({line[k], line[k + 1], DelaunayTriangulation::kNone, DelaunayTriangulation::kNone});
    return dt;
  }

  int v0 = a, v1 = b, v2 = c;
  if (orient(pts_[v0], pts_[v1], pts_[v2]) < 0) std::swap(v1, v2);
  tris_.reserve(2 * static_cast<std::size_t>(n) + 8);
  const std::array<int, 4> first = {
      new_tri(WorkTri{{v0, v1, v2}, {-1, -1, -1}, true}),
      new_tri(WorkTri{{v1, v0, kGhost}, {-1, -1, -1}, true}),
      new_tri(WorkTri{{v2, v1, kGhost}, {-1, -1, -1}, true}),
      new_tri(WorkTri{{v0, v2, kGhost}, {-1, -1, -1}, true}),
  };
  link_all(first);
  last_ = first[0];

  for (int k = 2; k < n; ++k) {
    if (k == c_pos) continue;
    insert(order[k]);
  }

  std::vector<int> remap(tris_.size(), DelaunayTriangulation::kNone);
  int count = 0;
  for (std::size_t i = 0; i < tris_.size(); ++i) {
    if (tris_[i].alive && tris_[i].v[2] != kGhost) remap[i] = count++;
  }
  dt.triangles.reserve(count);
  for (std::size_t i = 0; i < tris_.size(); ++i) {
    if (remap[i] == DelaunayTriangulation::kNone) continue;
    const WorkTri& w = tris_[i];
    DelaunayTriangulation::Triangle t;
    t.v = w.v;
    for (int j = 0; j < 3; ++j) t.adj[j] = remap[w.adj[j]];
    t.circumcenter = circumcenter(pts_[w.v[0]], pts_[w.v[1]], pts_[w.v[2]]);
    t.circumradius = dist(t.circumcenter, pts_[w.v[0]]);
    dt.triangles.push_back(t);
  }
  for (int t = 0; t < count; ++t) {
    const auto& tri = dt.triangles[t];
    for (int i = 0; i < 3; ++i) {
      const int nb = tri.adj[i];
      if (nb == DelaunayTriangulation::kNone || nb > t)
        dt.edges.push_back({tri.v[(i + 1) % 3], tri.v[(i + 2) % 3], t, nb});
    }
  }
  return dt;
}

}  // namespace

double DelaunayTriangulation::triangle_area(int t) const {
  const auto& v = triangles[t].v;
  return 0.5 * orient_det(sites[v[0]], sites[v[1]], sites[v[2]]);
}

DelaunayTriangulation delaunay(std::span<const Point> sites) {
  return Builder(sites).run();
}

}  // namespace wraphull
