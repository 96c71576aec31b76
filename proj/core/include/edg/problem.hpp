#pragma once

#include <map>
#include <string>
#include <utility>

#include "edg/types.hpp"

namespace edg {

/// Model problem  c sigma - grad u = 0,  -div sigma = f  in Omega,  u = g on the boundary.
///
/// `coefficient` is c (symmetric, uniformly positive definite). The exact
/// fields are optional and only needed for error studies.
struct ProblemDefinition {
  std::string name;
  TensorFunction coefficient;
  ScalarFunction source;
  ScalarFunction dirichlet;
  ScalarFunction exact_u;
  VectorFunction exact_sigma;

  bool has_exact_solution() const { return static_cast<bool>(exact_u) && static_cast<bool>(exact_sigma); }
};

/// u = sin(pi x) sin(pi y) on the unit square with c = (1 + x^2 y^2) I.
/// f is the closed-form -div(c^{-1} grad u); g = 0.
ProblemDefinition sine_problem();

/// Bivariate polynomial sum_{(a,b)} c_ab x^a y^b.
class Polynomial2 {
 public:
  Polynomial2() = default;
  explicit Polynomial2(std::map<std::pair<int, int>, double> terms) : terms_(std::move(terms)) {}

  double operator()(const Point& p) const;
  Eigen::Vector2d gradient(const Point& p) const;
  Tensor2 hessian(const Point& p) const;
  int degree() const;

 private:
  std::map<std::pair<int, int>, double> terms_;
};

/// Exact polynomial solution with a constant coefficient tensor:
/// sigma = c^{-1} grad u, f = -tr(c^{-1} hess u), g = u.
ProblemDefinition polynomial_problem(const Polynomial2& u, const Tensor2& c, std::string name = "polynomial");

/// Homogeneous data (f = 0, g = 0) with the given coefficient.
ProblemDefinition homogeneous_problem(TensorFunction coefficient);

/// Max |f - (-div sigma_fd)| over `samples` pseudo-random points of the unit
/// square, with sigma differentiated by central differences of step `step`.
/// Requires exact_sigma.
double source_consistency_defect(const ProblemDefinition& problem, int samples = 100, double step = 1e-4,
                                 unsigned seed = 20240601u);

/// Looks up a built-in problem by name ("sine"). Throws Error when unknown.
ProblemDefinition problem_by_name(const std::string& name);

}  // namespace edg
