#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "edg/mesh.hpp"

namespace edg {

using GradientMatrix = Eigen::Matrix<double, Eigen::Dynamic, 2>;

inline constexpr int polynomial_dimension(int degree) { return (degree + 1) * (degree + 2) / 2; }

/// L2(T)-orthonormal basis of P_degree(T) on one polygonal cell.
///
/// Built from the scaled monomials ((x - M_T)/h_T)^a ((y - M_T)/h_T)^b in graded
/// order, orthonormalized against the cell's own quadrature. The basis is
/// hierarchical: its first polynomial_dimension(d) functions span P_d(T).
class CellBasis {
 public:
  CellBasis() = default;
  CellBasis(const Point& center, double scale, int degree, Eigen::MatrixXd coefficients);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const Point& center() const { return center_; }
  double scale() const { return scale_; }

  Eigen::VectorXd values(const Point& x) const;
  GradientMatrix gradients(const Point& x) const;
  void evaluate(const Point& x, Eigen::Ref<Eigen::VectorXd> values, GradientMatrix* gradients) const;

  /// Scaled monomials at x (pre-orthonormalization).
  Eigen::VectorXd monomial_values(const Point& x) const;

  /// Rows: basis functions, columns: scaled monomial coefficients.
  const Eigen::MatrixXd& coefficients() const { return coeffs_; }

 private:
  Point center_ = Point::Zero();
  double scale_ = 1.0;
  int degree_ = 0;
  int dim_ = 1;
  std::vector<std::pair<int, int>> exponents_;
  Eigen::MatrixXd coeffs_;
};

/// Orthonormal P_degree basis on a cell. Throws NumericalError naming the cell
/// when the monomial Gram matrix is numerically singular.
CellBasis build_cell_basis(const Cell& cell, int degree);

/// Lagrange basis of P_degree on a segment, nodes at Gauss-Lobatto points of
/// the [0,1] parameter (endpoints included).
class EdgeBasis {
 public:
  EdgeBasis() = default;
  explicit EdgeBasis(int degree);

  int degree() const { return degree_; }
  int dim() const { return degree_ + 1; }
  const std::vector<double>& nodes() const { return nodes_; }

  Eigen::VectorXd values(double t) const;
  void evaluate(double t, Eigen::Ref<Eigen::VectorXd> out) const;

 private:
  int degree_ = 1;
  std::vector<double> nodes_;
  std::vector<double> denominators_;
};

/// Edge basis for a skeleton edge; parameter t runs from endpoint_ids[0] to endpoint_ids[1].
EdgeBasis build_edge_basis(const SkeletonEdge& edge, int degree);

}  // namespace edg
