#include "edg/local_solver.hpp"

#include <cmath>
#include <sstream>

namespace edg {

namespace {

void require_spd(const Tensor2& c, Index cell, const Point& x) {
  const double scale = c.cwiseAbs().maxCoeff();
  const bool symmetric = std::abs(c(0, 1) - c(1, 0)) <= 1e-12 * scale;
  if (!symmetric || !(c.trace() > 0.0) || !(c.determinant() > 0.0)) {
    std::ostringstream os;
    os << "cell " << cell << ": coefficient is not symmetric positive definite at (" << x.x() << ", " << x.y()
       << ")";
    throw NumericalError(os.str());
  }
}

}  // namespace

CellSpaces build_cell_spaces(const Cell& cell, int k) {
  if (k < 0) throw Error("build_cell_spaces: k must be >= 0");
  return {build_cell_basis(cell, k + 1), build_cell_basis(cell, k)};
}

Eigen::MatrixXd LocalSystem::saddle_matrix() const {
  const int nw = n_flux(), nv = n_potential();
  Eigen::MatrixXd m(nw + nv, nw + nv);
  m.topLeftCorner(nw, nw) = flux_mass;
  m.topRightCorner(nw, nv) = divergence.transpose();
  m.bottomLeftCorner(nv, nw) = -divergence;
  m.bottomRightCorner(nv, nv) = stabilization;
  return m;
}

LocalSystem assemble_local(const Mesh& mesh, Index cell_id, const CellSpaces& spaces,
                           const TensorFunction& coefficient, int k, const QuadratureOptions& quad) {
  const Cell& cell = mesh.cell(cell_id);
  const int np = spaces.flux.dim();
  const int nw = 2 * np;
  const int nv = spaces.potential.dim();
  const int nodes = k + 2;
  const int nl = local_trace_size(cell, k);

  LocalSystem sys;
  sys.cell = cell_id;
  sys.k = k;
  sys.alpha = 1.0 / cell.diameter;
  sys.flux_mass = Eigen::MatrixXd::Zero(nw, nw);
  sys.divergence = Eigen::MatrixXd::Zero(nv, nw);
  sys.stabilization = Eigen::MatrixXd::Zero(nv, nv);
  sys.trace_flux = Eigen::MatrixXd::Zero(nw, nl);
  sys.trace_potential = Eigen::MatrixXd::Zero(nv, nl);
  sys.trace_mass = Eigen::MatrixXd::Zero(nl, nl);

  // Cell integrals.
  const QuadratureRule cq = cell_quadrature(cell, quad.cell_exactness);
  Eigen::VectorXd psi(np), phi(nv);
  GradientMatrix dpsi(np, 2);
  for (std::size_t q = 0; q < cq.size(); ++q) {
    const Point& x = cq.points[q];
    const double w = cq.weights[q];
    const Tensor2 c = coefficient(x);
    require_spd(c, cell_id, x);
    spaces.flux.evaluate(x, psi, &dpsi);
    spaces.potential.evaluate(x, phi, nullptr);

    const Eigen::MatrixXd pp = w * psi * psi.transpose();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) sys.flux_mass.block(a * np, b * np, np, np) += c(a, b) * pp;
    for (int d = 0; d < 2; ++d) sys.divergence.middleCols(d * np, np).noalias() += w * phi * dpsi.col(d).transpose();
  }

  // Boundary integrals, one edge at a time.
  const LineRule line = edge_rule(quad.edge_points);
  const EdgeBasis edge_basis(k + 1);
  Eigen::VectorXd mu(nodes);
  for (std::size_t slot = 0; slot < cell.n_edges(); ++slot) {
    const SkeletonEdge& edge = mesh.edge(cell.edge_ids[slot]);
    const Point& a = mesh.vertex(edge.endpoint_ids[0]).position;
    const Point& b = mesh.vertex(edge.endpoint_ids[1]).position;
    const Point n = mesh.outward_normal(cell_id, slot);
    const int off = static_cast<int>(slot) * nodes;

    std::vector<double> t;
    const QuadratureRule eq = segment_quadrature(a, b, line, &t);
    for (std::size_t q = 0; q < eq.size(); ++q) {
      const double w = eq.weights[q];
      spaces.flux.evaluate(eq.points[q], psi, nullptr);
      spaces.potential.evaluate(eq.points[q], phi, nullptr);
      edge_basis.evaluate(t[q], mu);

      sys.stabilization.noalias() += (sys.alpha * w) * phi * phi.transpose();
      for (int d = 0; d < 2; ++d)
        sys.trace_flux.block(d * np, off, np, nodes).noalias() += (w * n[d]) * psi * mu.transpose();
      sys.trace_potential.middleCols(off, nodes).noalias() += (sys.alpha * w) * phi * mu.transpose();
      sys.trace_mass.block(off, off, nodes, nodes).noalias() += (sys.alpha * w) * mu * mu.transpose();
    }
  }

  const Eigen::MatrixXd saddle = sys.saddle_matrix();
  sys.factorization.compute(saddle);
  const double pivot = sys.factorization.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(pivot >= 1e-12 * saddle.cwiseAbs().maxCoeff()))
    throw NumericalError("cell " + std::to_string(cell_id) + ": local saddle matrix is singular");
  return sys;
}

Eigen::VectorXd load_moments(const Cell& cell, const CellSpaces& spaces, const ScalarFunction& f,
                             const QuadratureOptions& quad) {
  const QuadratureRule cq = cell_quadrature(cell, quad.cell_exactness);
  Eigen::VectorXd load = Eigen::VectorXd::Zero(spaces.potential.dim());
  Eigen::VectorXd phi(spaces.potential.dim());
  for (std::size_t q = 0; q < cq.size(); ++q) {
    spaces.potential.evaluate(cq.points[q], phi, nullptr);
    load.noalias() += (cq.weights[q] * f(cq.points[q])) * phi;
  }
  return load;
}

namespace {

LocalFields split(const Eigen::VectorXd& x, int nw) {
  return {x.head(nw), x.tail(x.size() - nw)};
}

}  // namespace

LocalFields solve_local_lambda(const LocalSystem& sys, const Eigen::VectorXd& trace) {
  Eigen::VectorXd rhs(sys.n_flux() + sys.n_potential());
  rhs << sys.trace_flux * trace, sys.trace_potential * trace;
  return split(sys.factorization.solve(rhs), sys.n_flux());
}

LocalFields solve_local_f(const LocalSystem& sys, const Eigen::VectorXd& load) {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(sys.n_flux() + sys.n_potential());
  rhs.tail(sys.n_potential()) = load;
  return split(sys.factorization.solve(rhs), sys.n_flux());
}

LocalFields CondensedElementBlock::recover(const Eigen::VectorXd& trace, int n_flux) const {
  const Eigen::VectorXd x = lift * trace + lift_load;
  return {x.head(n_flux), x.tail(x.size() - n_flux)};
}

CondensedElementBlock condense(const LocalSystem& sys, const Eigen::VectorXd& load) {
  const int nw = sys.n_flux(), nv = sys.n_potential();
  Eigen::MatrixXd rhs(nw + nv, sys.n_trace());
  rhs << sys.trace_flux, sys.trace_potential;

  CondensedElementBlock block;
  block.cell = sys.cell;
  block.lift = sys.factorization.solve(rhs);
  const auto s = block.lift.topRows(nw);
  const auto u = block.lift.bottomRows(nv);
  Eigen::MatrixXd S = sys.trace_mass;
  S.noalias() += sys.trace_flux.transpose() * s;
  S.noalias() -= sys.trace_potential.transpose() * u;
  block.matrix = std::move(S);

  Eigen::VectorXd frhs = Eigen::VectorXd::Zero(nw + nv);
  frhs.tail(nv) = load;
  block.lift_load = sys.factorization.solve(frhs);
  block.load = u.transpose() * load;
  return block;
}

CondensedElementBlock condense(const LocalSystem& sys) {
  return condense(sys, Eigen::VectorXd::Zero(sys.n_potential()));
}

}  // namespace edg
