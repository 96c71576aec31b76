#include "edg/problem.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/LU>

namespace edg {

ProblemDefinition sine_problem() {
  using std::numbers::pi;
  ProblemDefinition p;
  p.name = "sine";
  p.coefficient = [](const Point& x) -> Tensor2 {
    return (1.0 + x.x() * x.x() * x.y() * x.y()) * Tensor2::Identity();
  };
  p.exact_u = [](const Point& x) { return std::sin(pi * x.x()) * std::sin(pi * x.y()); };
  p.exact_sigma = [](const Point& x) -> Eigen::Vector2d {
    const double w = 1.0 + x.x() * x.x() * x.y() * x.y();
    return Eigen::Vector2d(pi * std::cos(pi * x.x()) * std::sin(pi * x.y()),
                           pi * std::sin(pi * x.x()) * std::cos(pi * x.y())) /
           w;
  };
  // With w = 1 + x^2 y^2:  f = 2 pi^2 u / w + (u_x w_x + u_y w_y) / w^2.
  p.source = [](const Point& x) {
    const double sx = std::sin(pi * x.x()), cx = std::cos(pi * x.x());
    const double sy = std::sin(pi * x.y()), cy = std::cos(pi * x.y());
    const double w = 1.0 + x.x() * x.x() * x.y() * x.y();
    const double wx = 2.0 * x.x() * x.y() * x.y();
    const double wy = 2.0 * x.x() * x.x() * x.y();
    return 2.0 * pi * pi * sx * sy / w + pi * (cx * sy * wx + sx * cy * wy) / (w * w);
  };
  p.dirichlet = [](const Point&) { return 0.0; };
  return p;
}

double Polynomial2::operator()(const Point& p) const {
  double v = 0.0;
  for (const auto& [e, c] : terms_) v += c * std::pow(p.x(), e.first) * std::pow(p.y(), e.second);
  return v;
}

Eigen::Vector2d Polynomial2::gradient(const Point& p) const {
  Eigen::Vector2d g = Eigen::Vector2d::Zero();
  for (const auto& [e, c] : terms_) {
    const auto [a, b] = e;
    if (a > 0) g.x() += c * a * std::pow(p.x(), a - 1) * std::pow(p.y(), b);
    if (b > 0) g.y() += c * b * std::pow(p.x(), a) * std::pow(p.y(), b - 1);
  }
  return g;
}

Tensor2 Polynomial2::hessian(const Point& p) const {
  Tensor2 h = Tensor2::Zero();
  for (const auto& [e, c] : terms_) {
    const auto [a, b] = e;
    if (a > 1) h(0, 0) += c * a * (a - 1) * std::pow(p.x(), a - 2) * std::pow(p.y(), b);
    if (b > 1) h(1, 1) += c * b * (b - 1) * std::pow(p.x(), a) * std::pow(p.y(), b - 2);
    if (a > 0 && b > 0) {
      const double v = c * a * b * std::pow(p.x(), a - 1) * std::pow(p.y(), b - 1);
      h(0, 1) += v;
      h(1, 0) += v;
    }
  }
  return h;
}

int Polynomial2::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    if (c != 0.0) d = std::max(d, e.first + e.second);
  return d;
}

ProblemDefinition polynomial_problem(const Polynomial2& u, const Tensor2& c, std::string name) {
  const Tensor2 cinv = c.inverse();
  ProblemDefinition p;
  p.name = std::move(name);
  p.coefficient = [c](const Point&) { return c; };
  p.exact_u = u;
  p.exact_sigma = [u, cinv](const Point& x) -> Eigen::Vector2d { return cinv * u.gradient(x); };
  p.source = [u, cinv](const Point& x) { return -(cinv * u.hessian(x)).trace(); };
  p.dirichlet = u;
  return p;
}

ProblemDefinition homogeneous_problem(TensorFunction coefficient) {
  ProblemDefinition p;
  p.name = "homogeneous";
  p.coefficient = std::move(coefficient);
  p.source = [](const Point&) { return 0.0; };
  p.dirichlet = [](const Point&) { return 0.0; };
  p.exact_u = [](const Point&) { return 0.0; };
  p.exact_sigma = [](const Point&) -> Eigen::Vector2d { return Eigen::Vector2d::Zero(); };
  return p;
}

double source_consistency_defect(const ProblemDefinition& problem, int samples, double step, unsigned seed) {
  if (!problem.exact_sigma) throw Error("source_consistency_defect: problem has no exact flux");
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Point x(dist(gen), dist(gen));
    const Point dx(step, 0.0), dy(0.0, step);
    const double div = (problem.exact_sigma(x + dx).x() - problem.exact_sigma(x - dx).x()) / (2.0 * step) +
                       (problem.exact_sigma(x + dy).y() - problem.exact_sigma(x - dy).y()) / (2.0 * step);
    worst = std::max(worst, std::abs(problem.source(x) + div));
  }
  return worst;
}

ProblemDefinition problem_by_name(const std::string& name) {
  if (name == "sine") return sine_problem();
  throw Error("unknown problem '" + name + "'");
}

}  // namespace edg
