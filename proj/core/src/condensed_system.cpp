#include "edg/condensed_system.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <thread>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

namespace edg {

namespace {

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n && !failed; i = next++) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

Eigen::VectorXd gather(const std::vector<Index>& dofs, const Eigen::VectorXd& global) {
  Eigen::VectorXd local(static_cast<Eigen::Index>(dofs.size()));
  for (std::size_t i = 0; i < dofs.size(); ++i) local[static_cast<Eigen::Index>(i)] = global[static_cast<Eigen::Index>(dofs[i])];
  return local;
}

}  // namespace

CondensedSystem assemble(const Mesh& mesh, const TraceSpace& space, const ProblemDefinition& problem,
                         const AssemblyOptions& options) {
  const int k = space.k();
  CondensedSystem sys;
  sys.mesh = &mesh;
  sys.space = space;
  sys.options = options;

  const std::size_t nc = mesh.n_cells();
  sys.cell_spaces.resize(nc);
  sys.locals.resize(nc);
  sys.blocks.resize(nc);

  // Element blocks are independent; each worker writes only its own slot.
  parallel_for(nc, options.threads, [&](std::size_t c) {
    const Cell& cell = mesh.cell(c);
    sys.cell_spaces[c] = build_cell_spaces(cell, k);
    sys.locals[c] = assemble_local(mesh, c, sys.cell_spaces[c], problem.coefficient, k, options.quad);
    sys.blocks[c] = condense(sys.locals[c], load_moments(cell, sys.cell_spaces[c], problem.source, options.quad));
  });

  const TraceField dirichlet = space.method() == Method::EDG
                                   ? boundary_interpolant(problem.dirichlet, mesh, k, options.quad.edge_points)
                                   : boundary_projection(problem.dirichlet, mesh, k, options.quad.edge_points);
  sys.boundary_values = space.to_dofs(dirichlet);

  // Sequential merge in cell order keeps the result independent of the thread count.
  const auto n = static_cast<Eigen::Index>(space.n_free());
  sys.rhs = Eigen::VectorXd::Zero(n);
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t c = 0; c < nc; ++c) {
    const auto dofs = space.cell_dofs(mesh, c);
    const CondensedElementBlock& b = sys.blocks[c];
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      const Index fi = space.free_index(dofs[i]);
      if (fi == TraceSpace::kFixed) continue;
      const auto ii = static_cast<Eigen::Index>(i);
      sys.rhs[static_cast<Eigen::Index>(fi)] += b.load[ii];
      for (std::size_t j = 0; j < dofs.size(); ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        const Index fj = space.free_index(dofs[j]);
        if (fj == TraceSpace::kFixed)
          sys.rhs[static_cast<Eigen::Index>(fi)] -= b.matrix(ii, jj) * sys.boundary_values[static_cast<Eigen::Index>(dofs[j])];
        else
          triplets.emplace_back(static_cast<Eigen::Index>(fi), static_cast<Eigen::Index>(fj), b.matrix(ii, jj));
      }
    }
  }
  sys.matrix.resize(n, n);
  sys.matrix.setFromTriplets(triplets.begin(), triplets.end());
  sys.matrix.makeCompressed();
  return sys;
}

SolveResult solve_spd(const SparseMatrix& matrix, const Eigen::VectorXd& rhs, const SolverOptions& options) {
  SolveResult result;
  if (matrix.rows() == 0) {
    result.x = Eigen::VectorXd::Zero(0);
    return result;
  }
  if (options.kind == LinearSolver::Direct) {
    Eigen::SimplicialLLT<SparseMatrix, Eigen::Lower> llt(matrix);
    if (llt.info() != Eigen::Success)
      throw NumericalError("sparse Cholesky failed: matrix is not symmetric positive definite");
    result.x = llt.solve(rhs);
  } else {
    Eigen::ConjugateGradient<SparseMatrix, Eigen::Lower | Eigen::Upper, Eigen::DiagonalPreconditioner<double>> cg;
    cg.setTolerance(options.tolerance);
    cg.setMaxIterations(static_cast<Eigen::Index>(10 * matrix.rows() + 100));
    cg.compute(matrix);
    result.x = cg.solve(rhs);
    result.iterations = static_cast<int>(cg.iterations());
    if (cg.info() != Eigen::Success) throw NumericalError("conjugate gradient did not converge");
  }
  const double bnorm = rhs.norm();
  const double rnorm = (matrix * result.x - rhs).norm();
  result.relative_residual = bnorm > 0.0 ? rnorm / bnorm : rnorm;
  return result;
}

Eigen::VectorXd solve(const CondensedSystem& system, const SolverOptions& options) {
  const SolveResult r = solve_spd(system.matrix, system.rhs, options);
  Eigen::VectorXd trace = system.boundary_values;
  for (Index d = 0; d < system.space.n_dofs(); ++d) {
    const Index f = system.space.free_index(d);
    if (f != TraceSpace::kFixed) trace[static_cast<Eigen::Index>(d)] = r.x[static_cast<Eigen::Index>(f)];
  }
  return trace;
}

DiscreteSolution recover(const CondensedSystem& system, const Eigen::VectorXd& trace) {
  const Mesh& mesh = *system.mesh;
  DiscreteSolution sol;
  sol.trace = trace;
  sol.u.resize(mesh.n_cells());
  sol.sigma.resize(mesh.n_cells());
  for (Index c = 0; c < mesh.n_cells(); ++c) {
    const auto local = gather(system.space.cell_dofs(mesh, c), trace);
    LocalFields f = system.blocks[c].recover(local, system.locals[c].n_flux());
    sol.sigma[c] = std::move(f.sigma);
    sol.u[c] = std::move(f.u);
  }
  return sol;
}

void write_matrix_coordinate(std::ostream& out, const SparseMatrix& matrix) {
  out << std::setprecision(17);
  for (Eigen::Index col = 0; col < matrix.outerSize(); ++col)
    for (SparseMatrix::InnerIterator it(matrix, col); it; ++it)
      if (it.row() >= it.col()) out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

}  // namespace edg
