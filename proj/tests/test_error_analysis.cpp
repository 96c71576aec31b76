#include <cmath>

#include <gtest/gtest.h>

#include "edg/convergence.hpp"
#include "edg/error_analysis.hpp"
#include "param_names.hpp"

namespace {

using edg::Method;
using edg::Point;
using edg::Tensor2;

TEST(L2Error, ProjectedPolynomialHasZeroError) {
  const auto mesh = edg::generate_uniform_triangular(3);
  for (int k = 0; k <= 2; ++k) {
    Tensor2 c = Tensor2::Identity();
    std::map<std::pair<int, int>, double> terms{{{0, 0}, 1.0}, {{k + 1, 0}, 2.0}};
    terms[{0, k + 1}] += -1.0;
    const auto problem = edg::polynomial_problem(edg::Polynomial2(terms), c);
    const auto sys = edg::assemble(mesh, edg::build_trace_space(mesh, k, Method::EDG), problem,
                                   edg::AssemblyOptions::for_order(k));
    edg::DiscreteSolution sol;
    for (const auto& cell : mesh.cells()) {
      sol.u.push_back(edg::project_V(cell, sys.cell_spaces[cell.id].potential, problem.exact_u, 12).coefficients);
      sol.sigma.push_back(edg::project_W(cell, sys.cell_spaces[cell.id].flux, problem.exact_sigma, 12));
    }
    EXPECT_LT(edg::l2_error_u(sys, sol, problem.exact_u, 12), 1e-12);
    EXPECT_LT(edg::l2_error_sigma(sys, sol, problem.exact_sigma, 12), 1e-12);
  }
}

TEST(Seminorm, VanishesOnPatchTest) {
  Tensor2 c;
  c << 1.5, 0.2, 0.2, 1.0;
  for (Method m : {Method::EDG, Method::HDG})
    for (int k = 0; k <= 2; ++k) {
      const auto mesh = edg::generate_uniform_quadrilateral(3);
      const auto problem = edg::polynomial_problem(edg::Polynomial2({{{k + 1, 0}, 1.0}, {{0, 1}, 0.5}}), c);
      const auto sys = edg::assemble(mesh, edg::build_trace_space(mesh, k, m), problem, edg::AssemblyOptions::for_order(k));
      const auto sol = edg::recover(sys, edg::solve(sys));
      EXPECT_LT(edg::seminorm_error(sys, sol, problem), 1e-10);
    }
}

TEST(ObservedRate, Examples) {
  EXPECT_NEAR(*edg::observed_rate(0.1, 0.025), 2.0, 1e-15);
  EXPECT_NEAR(*edg::observed_rate(8.076e-2, 2.084e-2), 1.954, 5e-4);
  EXPECT_NEAR(*edg::observed_rate(1.973e-2, 4.958e-3), 1.993, 5e-4);
  EXPECT_FALSE(edg::observed_rate(0.1, 0.0).has_value());
  EXPECT_FALSE(edg::observed_rate(std::nan(""), 0.1).has_value());
}

TEST(ObservedRate, OnlyBetweenHalvedMeshes) {
  const std::vector<double> h{0.4, 0.2, 0.15, 0.075};
  const std::vector<double> e{1.0, 0.25, 0.2, 0.05};
  const auto r = edg::observed_rates(h, e);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(*r[0], 2.0, 1e-14);
  EXPECT_FALSE(r[1].has_value());
  EXPECT_NEAR(*r[2], 2.0, 1e-14);
  EXPECT_THROW(edg::observed_rates(h, std::vector<double>{1.0}), edg::Error);
}

class SineConvergence : public ::testing::TestWithParam<std::tuple<int, Method, bool>> {};

TEST_P(SineConvergence, ErrorsDecreaseAtOptimalRates) {
  const auto [k, method, quads] = GetParam();
  edg::RunConfig cfg;
  cfg.method = method;
  cfg.k = k;
  cfg.mesh = quads ? edg::MeshFamily::Quadrilateral : edg::MeshFamily::Triangular;
  cfg.levels = {8, 16, 32};
  const auto report = edg::run_convergence(cfg, edg::sine_problem());
  for (std::size_t i = 1; i < report.records.size(); ++i) {
    EXPECT_LT(report.records[i].err_u, report.records[i - 1].err_u);
    EXPECT_LT(report.records[i].err_sigma, report.records[i - 1].err_sigma);
    EXPECT_LT(*report.records[i].seminorm, *report.records[i - 1].seminorm);
  }
  EXPECT_NEAR(*report.rates_u().back(), k + 2.0, 0.1);
  EXPECT_NEAR(*report.rates_sigma().back(), k + 1.0, 0.1);
}

INSTANTIATE_TEST_SUITE_P(AllConfigurations, SineConvergence,
                         ::testing::Combine(::testing::Values(0, 1, 2), ::testing::Values(Method::EDG, Method::HDG),
                                            ::testing::Bool()),
                         edg::testing::config_name);

TEST(QuadratureRefinement, DoublingBarelyMovesErrors) {
  edg::RunConfig cfg;
  cfg.k = 1;
  cfg.levels = {8};
  const auto base = edg::run_level(cfg, edg::sine_problem(), 8);
  cfg.quad_scale = 2;
  const auto fine = edg::run_level(cfg, edg::sine_problem(), 8);
  EXPECT_LT(std::abs(base.err_u - fine.err_u) / fine.err_u, 1e-3);
  EXPECT_LT(std::abs(base.err_sigma - fine.err_sigma) / fine.err_sigma, 1e-3);
}

}  // namespace
