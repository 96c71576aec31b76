#include "edg/error_analysis.hpp"

#include <cmath>

namespace edg {

double l2_error_u(const CondensedSystem& system, const DiscreteSolution& solution, const ScalarFunction& exact_u,
                  int exactness) {
  const Mesh& mesh = *system.mesh;
  double sum = 0.0;
  for (Index c = 0; c < mesh.n_cells(); ++c) {
    const CellBasis& basis = system.cell_spaces[c].potential;
    const QuadratureRule q = cell_quadrature(mesh.cell(c), exactness);
    Eigen::VectorXd phi(basis.dim());
    double cell_sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      basis.evaluate(q.points[i], phi, nullptr);
      const double e = exact_u(q.points[i]) - phi.dot(solution.u[c]);
      cell_sum += q.weights[i] * e * e;
    }
    sum += cell_sum;
  }
  return std::sqrt(sum);
}

double l2_error_sigma(const CondensedSystem& system, const DiscreteSolution& solution,
                      const VectorFunction& exact_sigma, int exactness) {
  const Mesh& mesh = *system.mesh;
  double sum = 0.0;
  for (Index c = 0; c < mesh.n_cells(); ++c) {
    const CellBasis& basis = system.cell_spaces[c].flux;
    const int np = basis.dim();
    const QuadratureRule q = cell_quadrature(mesh.cell(c), exactness);
    Eigen::VectorXd psi(np);
    double cell_sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      basis.evaluate(q.points[i], psi, nullptr);
      const Eigen::Vector2d sh(psi.dot(solution.sigma[c].head(np)), psi.dot(solution.sigma[c].tail(np)));
      cell_sum += q.weights[i] * (exact_sigma(q.points[i]) - sh).squaredNorm();
    }
    sum += cell_sum;
  }
  return std::sqrt(sum);
}

double seminorm_error(const CondensedSystem& system, const DiscreteSolution& solution,
                      const ProblemDefinition& problem) {
  if (!problem.has_exact_solution()) throw Error("seminorm_error: problem has no exact solution");
  const Mesh& mesh = *system.mesh;
  const int exactness = system.options.quad.error_exactness;
  const Eigen::VectorXd trace_interp = system.space.to_dofs(
      skeleton_interpolant(problem.exact_u, mesh, system.k(), system.space.method(), system.options.quad.edge_points));

  double sum = 0.0;
  for (Index c = 0; c < mesh.n_cells(); ++c) {
    const Cell& cell = mesh.cell(c);
    const LocalSystem& loc = system.locals[c];
    const Eigen::VectorXd es =
        project_W(cell, system.cell_spaces[c].flux, problem.exact_sigma, exactness) - solution.sigma[c];
    const Eigen::VectorXd eu =
        project_V(cell, system.cell_spaces[c].potential, problem.exact_u, exactness).coefficients - solution.u[c];
    const auto dofs = system.space.cell_dofs(mesh, c);
    Eigen::VectorXd el(static_cast<Eigen::Index>(dofs.size()));
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      const auto d = static_cast<Eigen::Index>(dofs[i]);
      el[static_cast<Eigen::Index>(i)] = trace_interp[d] - solution.trace[d];
    }
    // alpha ||e_u - e_lam||^2 = eu'D eu - 2 eu'H el + el'G el
    sum += es.dot(loc.flux_mass * es) + eu.dot(loc.stabilization * eu) - 2.0 * eu.dot(loc.trace_potential * el) +
           el.dot(loc.trace_mass * el);
  }
  return std::sqrt(std::max(sum, 0.0));
}

std::optional<double> observed_rate(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0) || !std::isfinite(coarse) || !std::isfinite(fine)) return std::nullopt;
  return std::log2(coarse / fine);
}

std::vector<std::optional<double>> observed_rates(std::span<const double> h, std::span<const double> errors) {
  if (h.size() != errors.size()) throw Error("observed_rates: size mismatch");
  std::vector<std::optional<double>> rates;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    const bool halved = std::abs(h[i] / h[i + 1] - 2.0) <= 2e-12;
    rates.push_back(halved ? observed_rate(errors[i], errors[i + 1]) : std::nullopt);
  }
  return rates;
}

}  // namespace edg
