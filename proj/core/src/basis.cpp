#include "edg/basis.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "edg/quadrature.hpp"

namespace edg {

namespace {

std::vector<std::pair<int, int>> graded_exponents(int degree) {
  std::vector<std::pair<int, int>> e;
  for (int d = 0; d <= degree; ++d)
    for (int b = 0; b <= d; ++b) e.emplace_back(d - b, b);
  return e;
}

}  // namespace

CellBasis::CellBasis(const Point& center, double scale, int degree, Eigen::MatrixXd coefficients)
    : center_(center),
      scale_(scale),
      degree_(degree),
      dim_(polynomial_dimension(degree)),
      exponents_(graded_exponents(degree)),
      coeffs_(std::move(coefficients)) {}

Eigen::VectorXd CellBasis::monomial_values(const Point& x) const {
  const double xi = (x.x() - center_.x()) / scale_;
  const double eta = (x.y() - center_.y()) / scale_;
  Eigen::VectorXd px(degree_ + 1), py(degree_ + 1);
  px[0] = py[0] = 1.0;
  for (int i = 1; i <= degree_; ++i) {
    px[i] = px[i - 1] * xi;
    py[i] = py[i - 1] * eta;
  }
  Eigen::VectorXd m(dim_);
  for (int i = 0; i < dim_; ++i) m[i] = px[exponents_[i].first] * py[exponents_[i].second];
  return m;
}

void CellBasis::evaluate(const Point& x, Eigen::Ref<Eigen::VectorXd> values, GradientMatrix* gradients) const {
  const double xi = (x.x() - center_.x()) / scale_;
  const double eta = (x.y() - center_.y()) / scale_;
  double px[32], py[32];
  px[0] = py[0] = 1.0;
  for (int i = 1; i <= degree_; ++i) {
    px[i] = px[i - 1] * xi;
    py[i] = py[i - 1] * eta;
  }
  Eigen::VectorXd m(dim_);
  for (int i = 0; i < dim_; ++i) m[i] = px[exponents_[i].first] * py[exponents_[i].second];
  values.noalias() = coeffs_ * m;

  if (gradients) {
    GradientMatrix dm(dim_, 2);
    for (int i = 0; i < dim_; ++i) {
      const auto [a, b] = exponents_[i];
      dm(i, 0) = a > 0 ? a * px[a - 1] * py[b] / scale_ : 0.0;
      dm(i, 1) = b > 0 ? b * px[a] * py[b - 1] / scale_ : 0.0;
    }
    gradients->noalias() = coeffs_ * dm;
  }
}

Eigen::VectorXd CellBasis::values(const Point& x) const {
  Eigen::VectorXd v(dim_);
  evaluate(x, v, nullptr);
  return v;
}

GradientMatrix CellBasis::gradients(const Point& x) const {
  Eigen::VectorXd v(dim_);
  GradientMatrix g(dim_, 2);
  evaluate(x, v, &g);
  return g;
}

CellBasis build_cell_basis(const Cell& cell, int degree) {
  if (degree < 0 || degree > 30) throw Error("build_cell_basis: degree out of range");
  const int dim = polynomial_dimension(degree);
  const CellBasis monomials(cell.star_point, cell.diameter, degree, Eigen::MatrixXd::Identity(dim, dim));
  const QuadratureRule quad = cell_quadrature(cell, 2 * degree);

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t q = 0; q < quad.size(); ++q) {
    const Eigen::VectorXd m = monomials.monomial_values(quad.points[q]);
    gram.selfadjointView<Eigen::Lower>().rankUpdate(m, quad.weights[q]);
  }
  gram = gram.selfadjointView<Eigen::Lower>();

  // Cholesky-based Gram-Schmidt, applied twice to recover orthogonality lost
  // to rounding on higher degrees.
  Eigen::MatrixXd coeffs = Eigen::MatrixXd::Identity(dim, dim);
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::MatrixXd g = coeffs * gram * coeffs.transpose();
    Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (g + g.transpose()));
    const Eigen::VectorXd diag = llt.matrixL().toDenseMatrix().diagonal();
    if (llt.info() != Eigen::Success || diag.minCoeff() <= 1e-7 * diag.maxCoeff())
      throw NumericalError("cell " + std::to_string(cell.id) + ": monomial Gram matrix is numerically singular (degree " +
                           std::to_string(degree) + ")");
    const Eigen::MatrixXd linv =
        llt.matrixL().solve(Eigen::MatrixXd::Identity(dim, dim));
    coeffs = linv * coeffs;
  }
  return CellBasis(cell.star_point, cell.diameter, degree, std::move(coeffs));
}

EdgeBasis::EdgeBasis(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxEdgePoints) throw Error("EdgeBasis: degree must be in [1, 20]");
  nodes_ = gauss_lobatto_nodes(degree + 1);
  denominators_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    double d = 1.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j)
      if (j != i) d *= nodes_[i] - nodes_[j];
    denominators_[i] = d;
  }
}

void EdgeBasis::evaluate(double t, Eigen::Ref<Eigen::VectorXd> out) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    double p = 1.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j)
      if (j != i) p *= t - nodes_[j];
    out[static_cast<Eigen::Index>(i)] = p / denominators_[i];
  }
}

Eigen::VectorXd EdgeBasis::values(double t) const {
  Eigen::VectorXd v(dim());
  evaluate(t, v);
  return v;
}

EdgeBasis build_edge_basis(const SkeletonEdge& /*edge*/, int degree) { return EdgeBasis(degree); }

}  // namespace edg
