#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "edg/condensed_system.hpp"

namespace edg {

enum class MeshFamily { Triangular, Quadrilateral, File };

/// One convergence study. Text form is flat `key=value` lines:
///   method=edg|hdg  k=0..2  mesh=tri|quad|<path>  levels=4,8,16
///   solver=direct|cg  tol=1e-12  quad_scale=1|2  threads=1
///   problem=sine  csv=<path>  md=<path>  dump_matrix=<path>
/// A mesh path may contain "{n}", replaced by each level.
struct RunConfig {
  Method method = Method::EDG;
  int k = 0;
  MeshFamily mesh = MeshFamily::Triangular;
  std::string mesh_file;
  std::vector<int> levels{4, 8, 16, 32, 64};
  LinearSolver solver = LinearSolver::Direct;
  double tol = 1e-12;
  int quad_scale = 1;
  unsigned threads = 1;
  std::string problem = "sine";
  std::string csv;
  std::string md;
  std::string dump_matrix;

  /// Throws Error on out-of-range values or a non-increasing level list.
  void validate() const;

  std::string mesh_label() const;
  QuadratureOptions quadrature() const;
};

std::string serialize(const RunConfig& config);
RunConfig parse_run_config(std::string_view text);

Method parse_method(std::string_view s);
LinearSolver parse_solver(std::string_view s);
std::vector<int> parse_int_list(std::string_view s);

}  // namespace edg
