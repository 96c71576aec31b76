#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edg/condensed_system.hpp"

namespace edg {

/// ||u - u_h|| over the mesh by cellwise quadrature of the given exactness.
double l2_error_u(const CondensedSystem& system, const DiscreteSolution& solution, const ScalarFunction& exact_u,
                  int exactness);

/// ||sigma - sigma_h|| over the mesh.
double l2_error_sigma(const CondensedSystem& system, const DiscreteSolution& solution,
                      const VectorFunction& exact_sigma, int exactness);

/// Energy-type seminorm of the discrete error
///   ( (c e_sigma, e_sigma) + sum_T alpha_T ||e_u - e_lambda||^2_{dT} )^{1/2}
/// with e_sigma = P_W sigma - sigma_h, e_u = P_V u - u_h and e_lambda the
/// skeleton interpolant of u minus the discrete trace. The skeleton
/// interpolant averages edgewise projections at vertices (EDG) or keeps them
/// edgewise (HDG).
double seminorm_error(const CondensedSystem& system, const DiscreteSolution& solution,
                      const ProblemDefinition& problem);

struct ErrorRecord {
  std::string mesh_tag;
  int n = 0;
  double h = 0.0;
  std::size_t n_dofs = 0;
  double err_u = 0.0;
  double err_sigma = 0.0;
  std::optional<double> seminorm;
};

/// log2(coarse / fine); empty when either error is zero or not finite.
std::optional<double> observed_rate(double coarse, double fine);

/// Rates between consecutive entries. A rate is only defined when the mesh
/// sizes halve (ratio 2 within 1e-12 relative) and both errors are positive.
std::vector<std::optional<double>> observed_rates(std::span<const double> h, std::span<const double> errors);

}  // namespace edg
