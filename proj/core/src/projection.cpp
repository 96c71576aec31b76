#include "edg/projection.hpp"

#include <Eigen/Cholesky>

namespace edg {

ScalarFieldOnCell project_V(const Cell& cell, const CellBasis& basis, const ScalarFunction& f, int exactness) {
  const QuadratureRule q = cell_quadrature(cell, exactness);
  ScalarFieldOnCell out{cell.id, Eigen::VectorXd::Zero(basis.dim())};
  Eigen::VectorXd phi(basis.dim());
  for (std::size_t i = 0; i < q.size(); ++i) {
    basis.evaluate(q.points[i], phi, nullptr);
    out.coefficients.noalias() += (q.weights[i] * f(q.points[i])) * phi;
  }
  return out;
}

Eigen::VectorXd project_W(const Cell& cell, const CellBasis& scalar_basis, const VectorFunction& tau, int exactness) {
  const QuadratureRule q = cell_quadrature(cell, exactness);
  const int np = scalar_basis.dim();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * np);
  Eigen::VectorXd psi(np);
  for (std::size_t i = 0; i < q.size(); ++i) {
    scalar_basis.evaluate(q.points[i], psi, nullptr);
    const Eigen::Vector2d v = tau(q.points[i]);
    out.head(np).noalias() += (q.weights[i] * v.x()) * psi;
    out.tail(np).noalias() += (q.weights[i] * v.y()) * psi;
  }
  return out;
}

Eigen::VectorXd project_M(const Point& a, const Point& b, const EdgeBasis& basis, const ScalarFunction& g,
                          const LineRule& line) {
  const int n = basis.dim();
  const double len = (b - a).norm();
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd mu(n);
  for (std::size_t q = 0; q < line.size(); ++q) {
    const double w = line.weights[q] * len;
    basis.evaluate(line.points[q], mu);
    mass.noalias() += w * mu * mu.transpose();
    rhs.noalias() += (w * g(a + line.points[q] * (b - a))) * mu;
  }
  return mass.llt().solve(rhs);
}

namespace {

TraceField edgewise(const ScalarFunction& g, const Mesh& mesh, int k, int edge_points, bool boundary_only) {
  const EdgeBasis basis(k + 1);
  const LineRule line = edge_rule(edge_points);
  TraceField field;
  field.edge_values.resize(mesh.n_edges());
  for (const SkeletonEdge& e : mesh.edges()) {
    if (boundary_only && !e.is_boundary()) continue;
    field.edge_values[e.id] = project_M(mesh.vertex(e.endpoint_ids[0]).position,
                                        mesh.vertex(e.endpoint_ids[1]).position, basis, g, line);
  }
  return field;
}

// Replaces endpoint values by the vertex average over every edge carrying data.
void average_vertices(const Mesh& mesh, TraceField& field) {
  std::vector<double> sum(mesh.n_vertices(), 0.0);
  std::vector<int> count(mesh.n_vertices(), 0);
  for (const SkeletonEdge& e : mesh.edges()) {
    const auto& v = field.edge_values[e.id];
    if (v.size() == 0) continue;
    sum[e.endpoint_ids[0]] += v[0];
    sum[e.endpoint_ids[1]] += v[v.size() - 1];
    ++count[e.endpoint_ids[0]];
    ++count[e.endpoint_ids[1]];
  }
  for (const SkeletonEdge& e : mesh.edges()) {
    auto& v = field.edge_values[e.id];
    if (v.size() == 0) continue;
    v[0] = sum[e.endpoint_ids[0]] / count[e.endpoint_ids[0]];
    v[v.size() - 1] = sum[e.endpoint_ids[1]] / count[e.endpoint_ids[1]];
  }
  field.continuous = true;
}

}  // namespace

TraceField boundary_interpolant(const ScalarFunction& g, const Mesh& mesh, int k, int edge_points) {
  TraceField field = edgewise(g, mesh, k, edge_points, true);
  average_vertices(mesh, field);
  return field;
}

TraceField boundary_projection(const ScalarFunction& g, const Mesh& mesh, int k, int edge_points) {
  return edgewise(g, mesh, k, edge_points, true);
}

TraceField skeleton_interpolant(const ScalarFunction& g, const Mesh& mesh, int k, Method method, int edge_points) {
  TraceField field = edgewise(g, mesh, k, edge_points, false);
  if (method == Method::EDG) average_vertices(mesh, field);
  return field;
}

double evaluate(const CellBasis& basis, const Eigen::VectorXd& coefficients, const Point& x) {
  return basis.values(x).dot(coefficients);
}

}  // namespace edg
