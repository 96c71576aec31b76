#include "projection_errors.hpp"

#include <cmath>

#include "edg/projection.hpp"

namespace edg::testing {

ProjectionErrors projection_errors(const Mesh& mesh, int k, const ScalarFunction& v, const VectorFunction& tau) {
  const int exact = 2 * (k + 2) + 8;
  const LineRule line = edge_rule(k + 6);
  const EdgeBasis eb(k + 1);
  ProjectionErrors out;
  out.h = mesh.h();
  for (const auto& cell : mesh.cells()) {
    const CellBasis bv = build_cell_basis(cell, k + 1);
    const CellBasis bw = build_cell_basis(cell, k);
    const auto pv = project_V(cell, bv, v, exact);
    const Eigen::VectorXd pw = project_W(cell, bw, tau, exact);
    const int n = bw.dim();
    const QuadratureRule q = cell_quadrature(cell, exact);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Point& x = q.points[i];
      const double ev = v(x) - evaluate(bv, pv.coefficients, x);
      const Eigen::VectorXd psi = bw.values(x);
      const Eigen::Vector2d et = tau(x) - Eigen::Vector2d(psi.dot(pw.head(n)), psi.dot(pw.tail(n)));
      out.v += q.weights[i] * ev * ev;
      out.w += q.weights[i] * et.squaredNorm();
    }
    for (std::size_t s = 0; s < cell.n_edges(); ++s) {
      const Point a = mesh.vertex(cell.vertex_ids[s]).position;
      const Point b = mesh.vertex(cell.vertex_ids[(s + 1) % cell.n_edges()]).position;
      const Eigen::VectorXd nodal = project_M(a, b, eb, v, line);
      const QuadratureRule sq = segment_quadrature(a, b, line);
      for (std::size_t i = 0; i < sq.size(); ++i) {
        const double param = (sq.points[i] - a).dot(b - a) / (b - a).squaredNorm();
        const double e = v(sq.points[i]) - eb.values(param).dot(nodal);
        out.m += sq.weights[i] * e * e;
      }
    }
  }
  out.v = std::sqrt(out.v);
  out.w = std::sqrt(out.w);
  out.m = std::sqrt(out.m);
  return out;
}

}  // namespace edg::testing
