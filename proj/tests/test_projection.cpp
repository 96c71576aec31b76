#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "edg/projection.hpp"
#include "projection_errors.hpp"

namespace {

using edg::Point;
using std::numbers::pi;

double sine(const Point& x) { return std::sin(pi * x.x()) * std::sin(pi * x.y()); }
Eigen::Vector2d sine_grad(const Point& x) {
  return {pi * std::cos(pi * x.x()) * std::sin(pi * x.y()), pi * std::sin(pi * x.x()) * std::cos(pi * x.y())};
}

TEST(ProjectV, ReproducesPolynomialsOfTheSpace) {
  const auto mesh = edg::generate_uniform_triangular(3);
  for (int k = 0; k <= 2; ++k) {
    auto f = [k](const Point& x) { return std::pow(x.x(), k + 1) - 2.0 * x.x() * std::pow(x.y(), k) + 0.5; };
    for (const auto& cell : mesh.cells()) {
      const auto b = edg::build_cell_basis(cell, k + 1);
      const auto p = edg::project_V(cell, b, f, 2 * k + 6);
      for (const auto& t : cell.sub_triangles) {
        const Point c = (t[0] + t[1] + t[2]) / 3.0;
        EXPECT_NEAR(edg::evaluate(b, p.coefficients, c), f(c), 1e-11);
        EXPECT_NEAR(edg::evaluate(b, p.coefficients, t[1]), f(t[1]), 1e-11);
      }
    }
  }
}

TEST(ProjectV, ResidualIsOrthogonal) {
  const auto mesh = edg::generate_uniform_quadrilateral(3);
  const auto& cell = mesh.cell(4);
  const auto b = edg::build_cell_basis(cell, 2);
  const auto p = edg::project_V(cell, b, sine, 14);
  const auto q = edg::cell_quadrature(cell, 14);
  Eigen::VectorXd ip = Eigen::VectorXd::Zero(b.dim());
  double norm = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Eigen::VectorXd phi = b.values(q.points[i]);
    const double r = sine(q.points[i]) - phi.dot(p.coefficients);
    ip += q.weights[i] * r * phi;
    norm += q.weights[i] * sine(q.points[i]) * sine(q.points[i]);
  }
  EXPECT_LT(ip.cwiseAbs().maxCoeff(), 1e-11 * std::sqrt(norm));
}

TEST(ProjectM, ConstantAndLinear) {
  const edg::LineRule line = edg::edge_rule(4);
  for (int d = 1; d <= 3; ++d) {
    const edg::EdgeBasis eb(d);
    const Eigen::VectorXd one = edg::project_M(Point(0, 0), Point(0.3, 0.4), eb, [](const Point&) { return 1.0; }, line);
    for (int i = 0; i < eb.dim(); ++i) EXPECT_NEAR(one[i], 1.0, 1e-14);
    const Eigen::VectorXd lin =
        edg::project_M(Point(1, 0), Point(1, 2), eb, [](const Point& x) { return 3 * x.y() - 1; }, line);
    for (int i = 0; i < eb.dim(); ++i) EXPECT_NEAR(lin[i], 3 * (2 * eb.nodes()[i]) - 1, 1e-13);
  }
}

TEST(BoundaryInterpolant, ZeroAndConstant) {
  const auto mesh = edg::generate_uniform_triangular(4);
  for (int k = 0; k <= 2; ++k) {
    const auto z = edg::boundary_interpolant([](const Point&) { return 0.0; }, mesh, k, k + 4);
    const auto c = edg::boundary_interpolant([](const Point&) { return 2.5; }, mesh, k, k + 4);
    EXPECT_TRUE(c.continuous);
    for (const auto& e : mesh.edges()) {
      if (!e.is_boundary()) {
        EXPECT_EQ(c.edge_values[e.id].size(), 0);
        continue;
      }
      EXPECT_LT(z.edge_values[e.id].cwiseAbs().maxCoeff(), 1e-15);
      EXPECT_LT((c.edge_values[e.id].array() - 2.5).abs().maxCoeff(), 1e-13);
    }
  }
}

TEST(BoundaryInterpolant, CornerAveragesTheTwoEdgeProjections) {
  // g = x + y^2, k = 0. On the bottom edge the P_1 projection is exact (0 at
  // the origin); on the left edge it is the projection of y^2, which does not
  // vanish at the origin. The corner takes the mean of the two.
  const auto mesh = edg::generate_uniform_quadrilateral(2);
  auto g = [](const Point& x) { return x.x() + x.y() * x.y(); };
  const auto field = edg::boundary_interpolant(g, mesh, 0, 6);
  const auto raw = edg::boundary_projection(g, mesh, 0, 6);
  EXPECT_FALSE(raw.continuous);
  // Find the boundary edges incident to vertex 0 (origin).
  std::vector<double> incident;
  for (const auto& e : mesh.edges()) {
    if (!e.is_boundary()) continue;
    for (int end = 0; end < 2; ++end)
      if (e.endpoint_ids[end] == 0) {
        const auto& v = raw.edge_values[e.id];
        incident.push_back(end == 0 ? v[0] : v[v.size() - 1]);
      }
  }
  ASSERT_EQ(incident.size(), 2u);
  // P_1 projection of t^2 on [0,1] is t - 1/6; the left edge has length 1/2.
  const double left = 0.25 * (-1.0 / 6.0);
  EXPECT_NEAR(std::min(incident[0], incident[1]), left, 1e-14);
  EXPECT_NEAR(std::max(incident[0], incident[1]), 0.0, 1e-14);
  const double expected = 0.5 * (incident[0] + incident[1]);
  for (const auto& e : mesh.edges()) {
    if (!e.is_boundary()) continue;
    for (int end = 0; end < 2; ++end)
      if (e.endpoint_ids[end] == 0) {
        const auto& v = field.edge_values[e.id];
        EXPECT_NEAR(end == 0 ? v[0] : v[v.size() - 1], expected, 1e-14);
      }
  }
}

TEST(BoundaryInterpolant, ReproducesGlobalPolynomials) {
  const auto mesh = edg::generate_uniform_triangular(3);
  for (int k = 0; k <= 2; ++k) {
    auto g = [k](const Point& x) { return std::pow(x.x() - 0.2 * x.y(), k + 1) + x.y(); };
    const auto field = edg::boundary_interpolant(g, mesh, k, k + 4);
    const edg::EdgeBasis eb(k + 1);
    for (const auto& e : mesh.edges()) {
      if (!e.is_boundary()) continue;
      const Point a = mesh.vertex(e.endpoint_ids[0]).position;
      const Point b = mesh.vertex(e.endpoint_ids[1]).position;
      for (int i = 0; i < eb.dim(); ++i)
        EXPECT_NEAR(field.edge_values[e.id][i], g(a + eb.nodes()[i] * (b - a)), 1e-11);
    }
  }
}

TEST(SkeletonInterpolant, EdgVertexValuesAgree) {
  const auto mesh = edg::generate_uniform_triangular(4);
  const auto field = edg::skeleton_interpolant(sine, mesh, 1, edg::Method::EDG, 6);
  std::vector<double> at(mesh.n_vertices(), std::nan(""));
  for (const auto& e : mesh.edges()) {
    const auto& v = field.edge_values[e.id];
    for (int end = 0; end < 2; ++end) {
      const double val = end == 0 ? v[0] : v[v.size() - 1];
      double& slot = at[e.endpoint_ids[end]];
      if (std::isnan(slot))
        slot = val;
      else
        EXPECT_NEAR(slot, val, 1e-12);
    }
  }
}

class ProjectionRates : public ::testing::TestWithParam<std::tuple<int, bool>> {};

TEST_P(ProjectionRates, MatchApproximationOrders) {
  const auto [k, quads] = GetParam();
  std::vector<edg::testing::ProjectionErrors> e;
  for (int n : {4, 8, 16}) {
    const auto mesh = quads ? edg::generate_uniform_quadrilateral(n) : edg::generate_uniform_triangular(n);
    e.push_back(edg::testing::projection_errors(mesh, k, sine, sine_grad));
  }
  for (std::size_t i = 1; i < e.size(); ++i) {
    EXPECT_NEAR(std::log2(e[i - 1].v / e[i].v), k + 2.0, 0.15);
    EXPECT_NEAR(std::log2(e[i - 1].w / e[i].w), k + 1.0, 0.15);
    EXPECT_NEAR(std::log2(e[i - 1].m / e[i].m), k + 1.5, 0.15);
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, ProjectionRates,
                         ::testing::Combine(::testing::Values(0, 1, 2), ::testing::Bool()),
                         [](const auto& info) {
                           return "k" + std::to_string(std::get<0>(info.param)) +
                                  (std::get<1>(info.param) ? "_quad" : "_tri");
                         });

}  // namespace
