#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edg/error_analysis.hpp"
#include "edg/run_config.hpp"

namespace edg {

struct ConvergenceReport {
  Method method = Method::EDG;
  int k = 0;
  std::string mesh;
  std::vector<ErrorRecord> records;

  std::vector<std::optional<double>> rates_u() const;
  std::vector<std::optional<double>> rates_sigma() const;
};

/// Mesh for one refinement level of a configuration.
Mesh make_mesh(const RunConfig& config, int n);

/// Solves one refinement level and measures the errors against the exact solution.
ErrorRecord run_level(const RunConfig& config, const ProblemDefinition& problem, int n);

/// One ErrorRecord per refinement level. Any failure is rethrown as Error
/// carrying the failing (method, k, n).
ConvergenceReport run_convergence(const RunConfig& config, const ProblemDefinition& problem);

}  // namespace edg
