#pragma once

#include <vector>

#include "edg/mesh.hpp"

namespace edg {

/// Points and positive weights on a planar domain, exact for polynomials of
/// total degree <= exactness.
struct QuadratureRule {
  std::vector<Point> points;
  std::vector<double> weights;
  int exactness = 0;

  std::size_t size() const { return points.size(); }
};

/// Gauss rule on [0,1].
struct LineRule {
  std::vector<double> points;
  std::vector<double> weights;
  int exactness = 0;

  std::size_t size() const { return points.size(); }
};

inline constexpr int kMaxTriangleExactness = 41;
inline constexpr int kMaxEdgePoints = 20;

/// Gauss-Legendre rule with `npoints` nodes on [0,1], exact to degree 2*npoints-1.
/// Valid for 1 <= npoints <= kMaxEdgePoints.
LineRule edge_rule(int npoints);

/// Gauss-Lobatto nodes on [0,1] (both endpoints included), ascending.
std::vector<double> gauss_lobatto_nodes(int npoints);

/// Collapsed-coordinate (Duffy) Gauss rule on the reference triangle
/// {x, y >= 0, x + y <= 1}.
QuadratureRule triangle_rule(int exactness);

/// Reference rule pushed forward to a physical triangle.
QuadratureRule map_to_triangle(const QuadratureRule& reference, const Triangle& tri);

/// Rule on a polygonal cell: the triangle rule on every sub-triangle, concatenated.
QuadratureRule cell_quadrature(const Cell& cell, int exactness);

/// Rule along a segment a->b; weights include the segment length. `param`
/// receives the [0,1] parameter of each point when non-null.
QuadratureRule segment_quadrature(const Point& a, const Point& b, const LineRule& line,
                                  std::vector<double>* param = nullptr);

/// Quadrature accuracy policy for one discretization.
struct QuadratureOptions {
  int cell_exactness = 8;
  int edge_points = 4;
  int error_exactness = 10;

  /// Defaults for polynomial order k: 2(k+2)+4 on cells, k+4 Gauss points per
  /// edge, and 2(k+2)+6 for error norms.
  static QuadratureOptions for_order(int k);

  /// Doubles every exactness (edge point counts follow 2n-1 exactness).
  QuadratureOptions doubled() const;
};

}  // namespace edg
