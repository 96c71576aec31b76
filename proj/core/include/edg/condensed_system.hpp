#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "edg/local_solver.hpp"
#include "edg/problem.hpp"
#include "edg/trace_space.hpp"

namespace edg {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct AssemblyOptions {
  QuadratureOptions quad;
  /// Worker threads for the element loop; 0 picks the hardware concurrency.
  /// The assembled system does not depend on this value.
  unsigned threads = 1;

  static AssemblyOptions for_order(int k) { return {QuadratureOptions::for_order(k), 1}; }
};

/// Condensed trace system K x = F over the free skeleton unknowns, together
/// with the per-cell data needed to recover (u_h, sigma_h).
///
/// Holds a pointer to the mesh, which must outlive the system.
struct CondensedSystem {
  const Mesh* mesh = nullptr;
  TraceSpace space;
  AssemblyOptions options;

  SparseMatrix matrix;
  Eigen::VectorXd rhs;
  /// Dirichlet values in the full dof numbering (zero on free dofs).
  Eigen::VectorXd boundary_values;

  std::vector<CellSpaces> cell_spaces;
  std::vector<LocalSystem> locals;
  std::vector<CondensedElementBlock> blocks;

  int k() const { return space.k(); }
};

/// Assembles the element blocks through the dof map and eliminates the
/// Dirichlet unknowns (EDG: continuous boundary interpolant of g; HDG:
/// edgewise L2 projection of g). Local failures propagate with cell ids.
CondensedSystem assemble(const Mesh& mesh, const TraceSpace& space, const ProblemDefinition& problem,
                         const AssemblyOptions& options);

enum class LinearSolver { Direct, ConjugateGradient };

struct SolverOptions {
  LinearSolver kind = LinearSolver::Direct;
  double tolerance = 1e-12;
};

struct SolveResult {
  Eigen::VectorXd x;
  double relative_residual = 0.0;
  int iterations = 0;
};

/// Solves an SPD system. Direct: sparse Cholesky (throws NumericalError on a
/// non-positive pivot). CG: Jacobi-preconditioned, relative tolerance.
SolveResult solve_spd(const SparseMatrix& matrix, const Eigen::VectorXd& rhs, const SolverOptions& options);

/// Solves the condensed system; returns every trace dof, boundary values included.
Eigen::VectorXd solve(const CondensedSystem& system, const SolverOptions& options = {});

/// Discrete fields: per-cell coefficients in the cell bases plus the trace.
struct DiscreteSolution {
  std::vector<Eigen::VectorXd> u;
  std::vector<Eigen::VectorXd> sigma;
  Eigen::VectorXd trace;
};

/// Elementwise back-substitution from the stored local factorizations.
DiscreteSolution recover(const CondensedSystem& system, const Eigen::VectorXd& trace);

/// Lower triangle of a symmetric matrix, one "i j value" triplet per line, 0-based.
void write_matrix_coordinate(std::ostream& out, const SparseMatrix& matrix);

}  // namespace edg
