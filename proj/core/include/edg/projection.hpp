#pragma once

#include <vector>

#include <Eigen/Core>

#include "edg/basis.hpp"
#include "edg/mesh.hpp"
#include "edg/quadrature.hpp"

namespace edg {

struct ScalarFieldOnCell {
  Index cell = 0;
  Eigen::VectorXd coefficients;
};

/// Skeleton function stored as Lagrange node values per edge, in each edge's
/// own orientation. Edges without data hold empty vectors.
struct TraceField {
  std::vector<Eigen::VectorXd> edge_values;
  bool continuous = false;
};

/// L2(T) projection onto the span of an orthonormal cell basis (no solve needed).
ScalarFieldOnCell project_V(const Cell& cell, const CellBasis& basis, const ScalarFunction& f, int exactness);

/// Componentwise L2(T) projection of a vector field; component-major coefficients.
Eigen::VectorXd project_W(const Cell& cell, const CellBasis& scalar_basis, const VectorFunction& tau, int exactness);

/// L2(F) projection onto P_degree(F) returned as Lagrange node values of `basis`.
Eigen::VectorXd project_M(const Point& a, const Point& b, const EdgeBasis& basis, const ScalarFunction& g,
                          const LineRule& line);

/// Continuous boundary interpolant of g into P_{k+1} on boundary edges:
/// edge-interior nodes take the edgewise L2 projection, boundary vertices take
/// the average of the projections from the boundary edges meeting there.
TraceField boundary_interpolant(const ScalarFunction& g, const Mesh& mesh, int k, int edge_points);

/// Edgewise L2 projection of g on boundary edges only (discontinuous).
TraceField boundary_projection(const ScalarFunction& g, const Mesh& mesh, int k, int edge_points);

/// Trace interpolant over the whole skeleton. EDG averages the edgewise
/// projections at every vertex over all incident edges; HDG keeps the
/// edgewise projections.
TraceField skeleton_interpolant(const ScalarFunction& g, const Mesh& mesh, int k, Method method, int edge_points);

/// Evaluates a cell field sum_i coeff_i phi_i(x).
double evaluate(const CellBasis& basis, const Eigen::VectorXd& coefficients, const Point& x);

}  // namespace edg
