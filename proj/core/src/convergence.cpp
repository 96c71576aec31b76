#include "edg/convergence.hpp"

#include <fstream>

#include "edg/mesh_io.hpp"

namespace edg {

namespace {

std::string substitute_level(std::string pattern, int n) {
  const std::string key = "{n}";
  for (auto pos = pattern.find(key); pos != std::string::npos; pos = pattern.find(key, pos))
    pattern.replace(pos, key.size(), std::to_string(n));
  return pattern;
}

std::vector<double> column(const std::vector<ErrorRecord>& r, double ErrorRecord::*field) {
  std::vector<double> out;
  for (const auto& e : r) out.push_back(e.*field);
  return out;
}

}  // namespace

std::vector<std::optional<double>> ConvergenceReport::rates_u() const {
  return observed_rates(column(records, &ErrorRecord::h), column(records, &ErrorRecord::err_u));
}

std::vector<std::optional<double>> ConvergenceReport::rates_sigma() const {
  return observed_rates(column(records, &ErrorRecord::h), column(records, &ErrorRecord::err_sigma));
}

Mesh make_mesh(const RunConfig& config, int n) {
  switch (config.mesh) {
    case MeshFamily::Triangular: return generate_uniform_triangular(n);
    case MeshFamily::Quadrilateral: return generate_uniform_quadrilateral(n);
    case MeshFamily::File: return read_mesh(substitute_level(config.mesh_file, n));
  }
  throw Error("unknown mesh family");
}

ErrorRecord run_level(const RunConfig& config, const ProblemDefinition& problem, int n) {
  if (!problem.has_exact_solution()) throw Error("problem '" + problem.name + "' has no exact solution");
  const Mesh mesh = make_mesh(config, n);
  const TraceSpace space = build_trace_space(mesh, config.k, config.method);
  AssemblyOptions opts{config.quadrature(), config.threads};
  const CondensedSystem system = assemble(mesh, space, problem, opts);

  if (!config.dump_matrix.empty()) {
    const bool per_level = config.dump_matrix.find("{n}") != std::string::npos;
    if (per_level || n == config.levels.back()) {
      std::ofstream out(substitute_level(config.dump_matrix, n));
      if (!out) throw Error("cannot write matrix dump " + config.dump_matrix);
      write_matrix_coordinate(out, system.matrix);
    }
  }

  const Eigen::VectorXd trace = solve(system, {config.solver, config.tol});
  const DiscreteSolution sol = recover(system, trace);

  ErrorRecord rec;
  rec.mesh_tag = std::to_string(n) + "x" + std::to_string(n);
  rec.n = n;
  rec.h = mesh.h();
  rec.n_dofs = space.n_free();
  rec.err_u = l2_error_u(system, sol, problem.exact_u, opts.quad.error_exactness);
  rec.err_sigma = l2_error_sigma(system, sol, problem.exact_sigma, opts.quad.error_exactness);
  rec.seminorm = seminorm_error(system, sol, problem);
  return rec;
}

ConvergenceReport run_convergence(const RunConfig& config, const ProblemDefinition& problem) {
  config.validate();
  ConvergenceReport report;
  report.method = config.method;
  report.k = config.k;
  report.mesh = config.mesh_label();
  for (int n : config.levels) {
    try {
      report.records.push_back(run_level(config, problem, n));
    } catch (const std::exception& e) {
      throw Error(std::string("convergence study failed at method=") + to_string(config.method) +
                  " k=" + std::to_string(config.k) + " n=" + std::to_string(n) + ": " + e.what());
    }
  }
  return report;
}

}  // namespace edg
