#pragma once

#include <Eigen/Core>
#include <Eigen/LU>

#include "edg/basis.hpp"
#include "edg/mesh.hpp"
#include "edg/quadrature.hpp"

namespace edg {

/// Local polynomial spaces of one cell: the potential space P_{k+1}(T) and
/// the scalar P_k(T) basis used for each flux component.
struct CellSpaces {
  CellBasis potential;
  CellBasis flux;

  int n_potential() const { return potential.dim(); }
  int n_flux() const { return 2 * flux.dim(); }
};

CellSpaces build_cell_spaces(const Cell& cell, int k);

/// Number of trace unknowns a cell sees: k+2 Lagrange nodes on each of its edges.
inline int local_trace_size(const Cell& cell, int k) { return static_cast<int>(cell.n_edges()) * (k + 2); }

/// Element matrices of the local problems on one cell.
///
/// Flux unknowns are ordered component-major: index d*dim(P_k) + i is the
/// d-th component of the i-th scalar flux basis function. Trace unknowns are
/// ordered slot-major: index e*(k+2) + j is node j (in the skeleton edge's own
/// orientation) of the cell's e-th edge.
///
///   A  (c sigma, tau)_T                 n_flux x n_flux
///   B  (v, div tau)_T                   n_pot  x n_flux
///   D  <alpha v, w>_{dT}                n_pot  x n_pot
///   E  <mu, tau.n>_{dT}                 n_flux x n_trace
///   H  <alpha mu, v>_{dT}               n_pot  x n_trace
///   G  <alpha mu, eta>_{dT}             n_trace x n_trace
///
/// The local problems read  A s + B^T u = E lam + 0,  -B s + D u = H lam + F.
struct LocalSystem {
  Index cell = 0;
  int k = 0;
  double alpha = 0.0;

  Eigen::MatrixXd flux_mass;        // A
  Eigen::MatrixXd divergence;       // B
  Eigen::MatrixXd stabilization;    // D
  Eigen::MatrixXd trace_flux;       // E
  Eigen::MatrixXd trace_potential;  // H
  Eigen::MatrixXd trace_mass;       // G

  Eigen::PartialPivLU<Eigen::MatrixXd> factorization;

  int n_flux() const { return static_cast<int>(flux_mass.rows()); }
  int n_potential() const { return static_cast<int>(stabilization.rows()); }
  int n_trace() const { return static_cast<int>(trace_mass.rows()); }

  /// [[A, B^T], [-B, D]]
  Eigen::MatrixXd saddle_matrix() const;
};

/// Local solution pair: flux and potential coefficients in the cell bases.
struct LocalFields {
  Eigen::VectorXd sigma;
  Eigen::VectorXd u;
};

/// Builds and factorizes the element matrices with alpha_T = 1/h_T.
/// Throws NumericalError naming the cell and point if c is not SPD at a
/// quadrature point, or if the local saddle matrix is singular.
LocalSystem assemble_local(const Mesh& mesh, Index cell, const CellSpaces& spaces, const TensorFunction& coefficient,
                           int k, const QuadratureOptions& quad);

/// (f, v)_T for every potential basis function.
Eigen::VectorXd load_moments(const Cell& cell, const CellSpaces& spaces, const ScalarFunction& f,
                             const QuadratureOptions& quad);

/// Local problem driven by trace data (zero load).
LocalFields solve_local_lambda(const LocalSystem& sys, const Eigen::VectorXd& trace);

/// Local problem driven by the load moments (zero trace).
LocalFields solve_local_f(const LocalSystem& sys, const Eigen::VectorXd& load);

/// Element contribution to the condensed trace system.
///
/// `matrix` = G + [E^T, -H^T] L^{-1} [E; H] (Schur complement of the local
/// saddle matrix L), `load` = (f, u_{mu_i})_T. `lift` maps local trace values
/// to stacked [sigma; u] coefficients and `lift_load` is the zero-trace
/// response to f, so the local fields are  lift * lam + lift_load.
struct CondensedElementBlock {
  Index cell = 0;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd load;
  Eigen::MatrixXd lift;
  Eigen::VectorXd lift_load;

  LocalFields recover(const Eigen::VectorXd& trace, int n_flux) const;
};

CondensedElementBlock condense(const LocalSystem& sys, const Eigen::VectorXd& load);
CondensedElementBlock condense(const LocalSystem& sys);

}  // namespace edg
