// Command-line driver: convergence studies and trace-unknown counts.
//
//   edg convergence --method edg --k 1 --mesh tri --levels 4,8,16,32,64 --csv out.csv
//   edg dofs --k 0,1,2 --levels 4,8,16,32,64

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "edg/convergence.hpp"
#include "edg/dof_table.hpp"
#include "edg/problem.hpp"
#include "edg/report.hpp"

namespace {

int run_convergence_command(edg::RunConfig config) {
  config.validate();
  const edg::ProblemDefinition problem = edg::problem_by_name(config.problem);
  if (problem.exact_sigma) {
    const double defect = edg::source_consistency_defect(problem);
    if (defect > 1e-5) throw edg::Error("source term of '" + problem.name + "' fails the finite-difference check");
  }

  const edg::ConvergenceReport report = edg::run_convergence(config, problem);

  edg::write_markdown(std::cout, report);
  if (!config.csv.empty()) {
    std::ofstream out(config.csv);
    if (!out) throw edg::Error("cannot write " + config.csv);
    edg::write_csv(out, report);
  }
  if (!config.md.empty()) {
    std::ofstream out(config.md);
    if (!out) throw edg::Error("cannot write " + config.md);
    edg::write_markdown(out, report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embedded and hybridizable DG solver for 2D elliptic problems"};
  app.require_subcommand(1);

  edg::RunConfig config;
  std::string method = "edg", mesh = "tri", levels = "4,8,16,32,64", solver = "direct", config_file;
  auto* conv = app.add_subcommand("convergence", "Run a refinement study on a manufactured solution");
  conv->add_option("--config", config_file, "key=value run configuration (command-line flags override it)");
  conv->add_option("--method", method, "edg | hdg");
  conv->add_option("--k", config.k, "polynomial order k (0, 1, 2)");
  conv->add_option("--mesh", mesh, "tri | quad | mesh file path (may contain {n})");
  conv->add_option("--levels", levels, "comma-separated n values, strictly increasing");
  conv->add_option("--solver", solver, "direct | cg");
  conv->add_option("--tol", config.tol, "relative solver tolerance");
  conv->add_option("--quad-scale", config.quad_scale, "1 = default quadrature, 2 = doubled exactness");
  conv->add_option("--threads", config.threads, "element-loop threads (0 = all cores)");
  conv->add_option("--problem", config.problem, "manufactured problem name");
  conv->add_option("--dump-matrix", config.dump_matrix, "write the condensed matrix (lower triangle, i j value)");
  conv->add_option("--csv", config.csv, "CSV output path");
  conv->add_option("--md", config.md, "Markdown output path");

  std::string dof_ks = "0,1,2", dof_levels = "4,8,16,32,64";
  auto* dofs = app.add_subcommand("dofs", "Count condensed-system unknowns for EDG and HDG");
  dofs->add_option("--k", dof_ks, "comma-separated k values");
  dofs->add_option("--levels", dof_levels, "comma-separated n values");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*conv) {
      if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) throw edg::Error("cannot read config " + config_file);
        std::stringstream ss;
        ss << in.rdbuf();
        edg::RunConfig from_file = edg::parse_run_config(ss.str());
        // Flags given explicitly on the command line win over the file.
        if (conv->count("--k") == 0) config.k = from_file.k;
        if (conv->count("--tol") == 0) config.tol = from_file.tol;
        if (conv->count("--quad-scale") == 0) config.quad_scale = from_file.quad_scale;
        if (conv->count("--threads") == 0) config.threads = from_file.threads;
        if (conv->count("--problem") == 0) config.problem = from_file.problem;
        if (conv->count("--dump-matrix") == 0) config.dump_matrix = from_file.dump_matrix;
        if (conv->count("--csv") == 0) config.csv = from_file.csv;
        if (conv->count("--md") == 0) config.md = from_file.md;
        config.method = from_file.method;
        config.mesh = from_file.mesh;
        config.mesh_file = from_file.mesh_file;
        config.levels = from_file.levels;
        config.solver = from_file.solver;
      }
      if (config_file.empty() || conv->count("--method")) config.method = edg::parse_method(method);
      if (config_file.empty() || conv->count("--mesh")) {
        if (mesh == "tri") config.mesh = edg::MeshFamily::Triangular;
        else if (mesh == "quad") config.mesh = edg::MeshFamily::Quadrilateral;
        else {
          config.mesh = edg::MeshFamily::File;
          config.mesh_file = mesh;
        }
      }
      if (config_file.empty() || conv->count("--levels")) config.levels = edg::parse_int_list(levels);
      if (config_file.empty() || conv->count("--solver")) config.solver = edg::parse_solver(solver);
      return run_convergence_command(config);
    }
    if (*dofs) {
      const auto ks = edg::parse_int_list(dof_ks);
      const auto ns = edg::parse_int_list(dof_levels);
      for (int k : ks)
        if (k < 0) throw edg::Error("k must be non-negative");
      for (int n : ns)
        if (n < 1) throw edg::Error("levels must be positive");
      edg::write_dof_table(std::cout, edg::run_dof_comparison(ks, ns));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
