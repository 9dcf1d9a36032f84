#pragma once

#include <array>
#include <span>
#include <vector>

#include "wraphull/point.hpp"

namespace wraphull {

/// Delaunay triangulation of a planar point set (Bowyer-Watson insertion with
/// ghost triangles for the hull). Triangles are counter-clockwise. For
/// all-collinear inputs there are no triangles and the edges chain the
/// points in order along their common line.
struct DelaunayTriangulation {
  static constexpr int kNone = -1;

  struct Triangle {
    std::array<int, 3> v;    // site indices, counter-clockwise
    std::array<int, 3> adj;  // adj[i] is across the edge opposite v[i], kNone on the hull
    Point circumcenter;
    double circumradius;
  };

  /// Undirected edge a-b; `left` is the triangle to the left of a->b.
  struct Edge {
    int a;
    int b;
    int left;
    int right;
  };

  std::vector<Point> sites;
  std::vector<Triangle> triangles;
  std::vector<Edge> edges;

  double triangle_area(int t) const;
};

DelaunayTriangulation delaunay(std::span<const Point> sites);

}  // namespace wraphull
