#include "monolithic.hpp"

#include <Eigen/LU>

#include "edg/quadrature.hpp"

namespace edg::testing {
namespace {

std::vector<std::pair<int, int>> exponents(int degree) {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d <= degree; ++d)
    for (int b = 0; b <= d; ++b) out.emplace_back(d - b, b);
  return out;
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

Eigen::VectorXd monomials(const std::vector<std::pair<int, int>>& ex, const Point& d) {
  Eigen::VectorXd v(ex.size());
  for (std::size_t i = 0; i < ex.size(); ++i) v[i] = ipow(d.x(), ex[i].first) * ipow(d.y(), ex[i].second);
  return v;
}

// Divergence helpers: d/dx and d/dy of each monomial.
Eigen::VectorXd monomials_dx(const std::vector<std::pair<int, int>>& ex, const Point& d) {
  Eigen::VectorXd v(ex.size());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const auto [a, b] = ex[i];
    v[i] = a == 0 ? 0.0 : a * ipow(d.x(), a - 1) * ipow(d.y(), b);
  }
  return v;
}

Eigen::VectorXd monomials_dy(const std::vector<std::pair<int, int>>& ex, const Point& d) {
  Eigen::VectorXd v(ex.size());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    const auto [a, b] = ex[i];
    v[i] = b == 0 ? 0.0 : b * ipow(d.x(), a) * ipow(d.y(), b - 1);
  }
  return v;
}

Eigen::VectorXd lagrange(const std::vector<double>& nodes, double t) {
  Eigen::VectorXd v(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double p = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (j != i) p *= (t - nodes[j]) / (nodes[i] - nodes[j]);
    v[i] = p;
  }
  return v;
}

}  // namespace

double MonolithicSolution::u_at(Index cell, const Point& x) const {
  return monomials(exponents(k + 1), x - centers[cell]).dot(u[cell]);
}

Eigen::Vector2d MonolithicSolution::sigma_at(Index cell, const Point& x) const {
  const Eigen::VectorXd m = monomials(exponents(k), x - centers[cell]);
  const auto n = m.size();
  return {m.dot(sigma[cell].head(n)), m.dot(sigma[cell].tail(n))};
}

MonolithicSolution solve_monolithic(const Mesh& mesh, const ProblemDefinition& problem, int k, Method method) {
  const auto ex_u = exponents(k + 1);
  const auto ex_s = exponents(k);
  const int nu = static_cast<int>(ex_u.size());
  const int ns = static_cast<int>(ex_s.size());
  const int nsig = 2 * ns;
  const int npe = k + 2;
  const std::vector<double> nodes = gauss_lobatto_nodes(npe);
  const LineRule line = edge_rule(k + 6);
  const int cell_exact = 2 * k + 12;

  // Trace unknown keys.
  auto key_of = [&](Index e, int j) -> std::pair<Index, int> {
    if (method == Method::EDG) {
      const auto& edge = mesh.edge(e);
      if (j == 0) return {edge.endpoint_ids[0], -1};
      if (j == npe - 1) return {edge.endpoint_ids[1], -1};
    }
    return {e, j};
  };
  std::map<std::pair<Index, int>, int> trace_index;
  std::map<std::pair<Index, int>, bool> trace_fixed;
  for (const auto& edge : mesh.edges())
    for (int j = 0; j < npe; ++j) {
      const auto key = key_of(edge.id, j);
      bool& fixed = trace_fixed[key];
      fixed = fixed || edge.is_boundary();
    }

  // Boundary values: edgewise L2 projection, averaged at vertices for EDG.
  std::map<std::pair<Index, int>, double> fixed_sum;
  std::map<std::pair<Index, int>, int> fixed_count;
  for (const auto& edge : mesh.edges()) {
    if (!edge.is_boundary()) continue;
    const Point p0 = mesh.vertex(edge.endpoint_ids[0]).position;
    const Point p1 = mesh.vertex(edge.endpoint_ids[1]).position;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(npe, npe);
    Eigen::VectorXd r = Eigen::VectorXd::Zero(npe);
    for (std::size_t q = 0; q < line.size(); ++q) {
      const double t = line.points[q];
      const Eigen::VectorXd phi = lagrange(nodes, t);
      M += line.weights[q] * phi * phi.transpose();
      r += line.weights[q] * problem.dirichlet(p0 + t * (p1 - p0)) * phi;
    }
    const Eigen::VectorXd vals = M.partialPivLu().solve(r);
    for (int j = 0; j < npe; ++j) {
      const auto key = key_of(edge.id, j);
      fixed_sum[key] += vals[j];
      fixed_count[key] += 1;
    }
  }

  int n_free = 0;
  for (const auto& [key, fixed] : trace_fixed)
    if (!fixed) trace_index[key] = n_free++;

  const int n_cells = static_cast<int>(mesh.n_cells());
  const int off_u = n_cells * nsig;
  const int off_l = off_u + n_cells * nu;
  const int N = off_l + n_free;
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N, N);
  Eigen::VectorXd F = Eigen::VectorXd::Zero(N);

  MonolithicSolution sol;
  sol.k = k;
  sol.n_unknowns = static_cast<std::size_t>(N);

  for (const auto& cell : mesh.cells()) {
    const int c = static_cast<int>(cell.id);
    const Point ctr = cell.star_point;
    sol.centers.push_back(ctr);
    const int is = c * nsig;
    const int iu = off_u + c * nu;

    const QuadratureRule cq = cell_quadrature(cell, cell_exact);
    for (std::size_t q = 0; q < cq.size(); ++q) {
      const Point& x = cq.points[q];
      const double w = cq.weights[q];
      const Eigen::VectorXd ms = monomials(ex_s, x - ctr);
      const Eigen::VectorXd dx = monomials_dx(ex_s, x - ctr);
      const Eigen::VectorXd dy = monomials_dy(ex_s, x - ctr);
      const Eigen::VectorXd mu = monomials(ex_u, x - ctr);
      const Tensor2 cx = problem.coefficient(x);
      // (c sigma, tau)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          K.block(is + a * ns, is + b * ns, ns, ns) += w * cx(a, b) * ms * ms.transpose();
      // tau rows: + (u, div tau); v rows: - (v, div sigma)
      Eigen::MatrixXd Bx = w * mu * dx.transpose();
      Eigen::MatrixXd By = w * mu * dy.transpose();
      K.block(is, iu, ns, nu) += Bx.transpose();
      K.block(is + ns, iu, ns, nu) += By.transpose();
      K.block(iu, is, nu, ns) -= Bx;
      K.block(iu, is + ns, nu, ns) -= By;
      F.segment(iu, nu) += w * problem.source(x) * mu;
    }

    for (std::size_t s = 0; s < cell.n_edges(); ++s) {
      const Index e = cell.edge_ids[s];
      const auto& edge = mesh.edge(e);
      const Point a = mesh.vertex(cell.vertex_ids[s]).position;
      const Point b = mesh.vertex(cell.vertex_ids[(s + 1) % cell.n_edges()]).position;
      const double len = (b - a).norm();
      const Point nrm = Point(b.y() - a.y(), a.x() - b.x()) / len;
      const double alpha = 1.0 / cell.diameter;
      const Point p0 = mesh.vertex(edge.endpoint_ids[0]).position;
      const Point p1 = mesh.vertex(edge.endpoint_ids[1]).position;

      for (std::size_t q = 0; q < line.size(); ++q) {
        const Point x = a + line.points[q] * (b - a);
        const double w = line.weights[q] * len;
        const double t = (x - p0).dot(p1 - p0) / (p1 - p0).squaredNorm();
        const Eigen::VectorXd ms = monomials(ex_s, x - ctr);
        const Eigen::VectorXd mu = monomials(ex_u, x - ctr);
        const Eigen::VectorXd phi = lagrange(nodes, t);
        // alpha <u, v>
        K.block(iu, iu, nu, nu) += w * alpha * mu * mu.transpose();
        for (int j = 0; j < npe; ++j) {
          const auto key = key_of(e, j);
          const bool fixed = trace_fixed.at(key);
          // tau rows: -<lam, tau.n>;  v rows: -alpha <lam, v>
          Eigen::VectorXd col(nsig + nu);
          col << -w * phi[j] * nrm.x() * ms, -w * phi[j] * nrm.y() * ms, -w * alpha * phi[j] * mu;
          if (fixed) {
            const double g = fixed_sum.at(key) / fixed_count.at(key);
            F.segment(is, nsig) -= g * col.head(nsig);
            F.segment(iu, nu) -= g * col.tail(nu);
          } else {
            const int il = off_l + trace_index.at(key);
            K.block(is, il, nsig, 1) += col.head(nsig);
            K.block(iu, il, nu, 1) += col.tail(nu);
          }
        }
        // mu rows: <sigma.n - alpha (u - lam), mu>
        for (int i = 0; i < npe; ++i) {
          const auto ki = key_of(e, i);
          if (trace_fixed.at(ki)) continue;
          const int row = off_l + trace_index.at(ki);
          K.block(row, is, 1, ns) += (w * phi[i] * nrm.x() * ms).transpose();
          K.block(row, is + ns, 1, ns) += (w * phi[i] * nrm.y() * ms).transpose();
          K.block(row, iu, 1, nu) -= (w * alpha * phi[i] * mu).transpose();
          for (int j = 0; j < npe; ++j) {
            const auto kj = key_of(e, j);
            const double v = w * alpha * phi[i] * phi[j];
            if (trace_fixed.at(kj))
              F[row] -= v * fixed_sum.at(kj) / fixed_count.at(kj);
            else
              K(row, off_l + trace_index.at(kj)) += v;
          }
        }
      }
    }
  }

  const Eigen::VectorXd x = K.fullPivLu().solve(F);
  for (int c = 0; c < n_cells; ++c) {
    sol.sigma.push_back(x.segment(c * nsig, nsig));
    sol.u.push_back(x.segment(off_u + c * nu, nu));
  }
  for (const auto& edge : mesh.edges())
    for (int j = 0; j < npe; ++j) {
      const auto key = key_of(edge.id, j);
      sol.trace[{edge.id, j}] =
          trace_fixed.at(key) ? fixed_sum.at(key) / fixed_count.at(key) : x[off_l + trace_index.at(key)];
    }
  return sol;
}

}  // namespace edg::testing
