#include "edg/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace edg {

namespace {

// Legendre P_n and P_n' on [-1,1] by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int j = 2; j <= n; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

// Gauss-Legendre nodes/weights on [-1,1], Newton from Chebyshev guesses.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = legendre_with_derivative(n, z);
      dp = d;
      const double dz = p / d;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    dp = legendre_with_derivative(n, z).second;
    // ascending order
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

}  // namespace

LineRule edge_rule(int npoints) {
  if (npoints < 1 || npoints > kMaxEdgePoints)
    throw Error("edge_rule: npoints must be in [1, " + std::to_string(kMaxEdgePoints) + "], got " +
                std::to_string(npoints));
  std::vector<double> x, w;
  gauss_legendre(npoints, x, w);
  LineRule rule;
  rule.exactness = 2 * npoints - 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    rule.points.push_back(0.5 * (x[i] + 1.0));
    rule.weights.push_back(0.5 * w[i]);
  }
  return rule;
}

std::vector<double> gauss_lobatto_nodes(int npoints) {
  if (npoints < 2 || npoints > kMaxEdgePoints + 1)
    throw Error("gauss_lobatto_nodes: npoints must be in [2, " + std::to_string(kMaxEdgePoints + 1) + "]");
  // Interior nodes are the roots of P'_{N}, N = npoints-1.
  const int n = npoints - 1;
  std::vector<double> nodes(static_cast<std::size_t>(npoints));
  nodes.front() = 0.0;
  nodes.back() = 1.0;
  for (int i = 1; i < n; ++i) {
    double z = -std::cos(std::numbers::pi * i / n);
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre_with_derivative(n, z);
      // (1-z^2) P'' = 2 z P' - n(n+1) P
      const double d2p = (2.0 * z * dp - n * (n + 1.0) * p) / (1.0 - z * z);
      const double dz = dp / d2p;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    nodes[static_cast<std::size_t>(i)] = 0.5 * (z + 1.0);
  }
  return nodes;
}

QuadratureRule triangle_rule(int exactness) {
  if (exactness < 0 || exactness > kMaxTriangleExactness)
    throw Error("triangle_rule: unsupported exactness " + std::to_string(exactness) + " (max " +
                std::to_string(kMaxTriangleExactness) + ")");
  // The collapsed x-direction carries one extra degree from the Jacobian.
  const int n = (exactness + 3) / 2;
  std::vector<double> x, w;
  gauss_legendre(n, x, w);

  QuadratureRule rule;
  rule.exactness = exactness;
  rule.points.reserve(static_cast<std::size_t>(n * n));
  rule.weights.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    const double xi = 0.5 * (x[static_cast<std::size_t>(i)] + 1.0);
    const double wi = 0.5 * w[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const double eta = 0.5 * (x[static_cast<std::size_t>(j)] + 1.0);
      const double wj = 0.5 * w[static_cast<std::size_t>(j)];
      rule.points.emplace_back(xi, eta * (1.0 - xi));
      rule.weights.push_back(wi * wj * (1.0 - xi));
    }
  }
  return rule;
}

QuadratureRule map_to_triangle(const QuadratureRule& reference, const Triangle& tri) {
  const Point e1 = tri[1] - tri[0];
  const Point e2 = tri[2] - tri[0];
  const double jac = std::abs(e1.x() * e2.y() - e1.y() * e2.x());
  QuadratureRule rule;
  rule.exactness = reference.exactness;
  rule.points.reserve(reference.size());
  rule.weights.reserve(reference.size());
  for (std::size_t q = 0; q < reference.size(); ++q) {
    rule.points.push_back(tri[0] + reference.points[q].x() * e1 + reference.points[q].y() * e2);
    rule.weights.push_back(reference.weights[q] * jac);
  }
  return rule;
}

QuadratureRule cell_quadrature(const Cell& cell, int exactness) {
  const QuadratureRule ref = triangle_rule(exactness);
  QuadratureRule rule;
  rule.exactness = exactness;
  rule.points.reserve(ref.size() * cell.sub_triangles.size());
  rule.weights.reserve(ref.size() * cell.sub_triangles.size());
  for (const Triangle& t : cell.sub_triangles) {
    const QuadratureRule part = map_to_triangle(ref, t);
    rule.points.insert(rule.points.end(), part.points.begin(), part.points.end());
    rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
  }
  return rule;
}

QuadratureRule segment_quadrature(const Point& a, const Point& b, const LineRule& line,
                                  std::vector<double>* param) {
  const double len = (b - a).norm();
  QuadratureRule rule;
  rule.exactness = line.exactness;
  for (std::size_t q = 0; q < line.size(); ++q) {
    rule.points.push_back(a + line.points[q] * (b - a));
    rule.weights.push_back(line.weights[q] * len);
  }
  if (param) *param = line.points;
  return rule;
}

QuadratureOptions QuadratureOptions::for_order(int k) {
  return {2 * (k + 2) + 4, k + 4, 2 * (k + 2) + 6};
}

QuadratureOptions QuadratureOptions::doubled() const {
  return {2 * cell_exactness, 2 * edge_points, 2 * error_exactness};
}

}  // namespace edg
