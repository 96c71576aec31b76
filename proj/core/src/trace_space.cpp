#include "edg/trace_space.hpp"

namespace edg {

TraceSpace TraceSpace::build(const Mesh& mesh, int k, Method method) {
  if (k < 0) throw Error("build_trace_space: k must be >= 0");
  TraceSpace s;
  s.method_ = method;
  s.k_ = k;
  const Index nodes = static_cast<Index>(k + 2);
  s.edge_dofs_.assign(mesh.n_edges() * nodes, kFixed);

  Index next = 0;
  if (method == Method::EDG) {
    std::vector<Index> vertex_dof(mesh.n_vertices());
    for (Index v = 0; v < mesh.n_vertices(); ++v) {
      vertex_dof[v] = next++;
      s.boundary_.push_back(mesh.is_boundary_vertex(v));
    }
    for (const SkeletonEdge& e : mesh.edges()) {
      s.edge_dofs_[e.id * nodes] = vertex_dof[e.endpoint_ids[0]];
      s.edge_dofs_[e.id * nodes + nodes - 1] = vertex_dof[e.endpoint_ids[1]];
    }
    for (const SkeletonEdge& e : mesh.edges())
      for (Index j = 1; j + 1 < nodes; ++j) {
        s.edge_dofs_[e.id * nodes + j] = next++;
        s.boundary_.push_back(e.is_boundary());
      }
  } else {
    for (const SkeletonEdge& e : mesh.edges())
      for (Index j = 0; j < nodes; ++j) {
        s.edge_dofs_[e.id * nodes + j] = next++;
        s.boundary_.push_back(e.is_boundary());
      }
  }

  s.free_index_.assign(s.boundary_.size(), kFixed);
  for (Index d = 0; d < s.boundary_.size(); ++d)
    if (!s.boundary_[d]) s.free_index_[d] = s.n_free_++;
  return s;
}

std::vector<Index> TraceSpace::cell_dofs(const Mesh& mesh, Index cell) const {
  const Cell& c = mesh.cell(cell);
  std::vector<Index> out;
  out.reserve(c.n_edges() * static_cast<std::size_t>(k_ + 2));
  for (Index e : c.edge_ids)
    for (int j = 0; j < k_ + 2; ++j) out.push_back(dof(e, j));
  return out;
}

Eigen::VectorXd TraceSpace::to_dofs(const TraceField& field) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_dofs()));
  const Index n_edges = edge_dofs_.size() / static_cast<Index>(k_ + 2);
  for (Index e = 0; e < n_edges && e < field.edge_values.size(); ++e) {
    const auto& v = field.edge_values[e];
    if (v.size() == 0) continue;
    if (v.size() != k_ + 2) throw Error("TraceSpace::to_dofs: wrong number of node values on edge " + std::to_string(e));
    for (int j = 0; j < k_ + 2; ++j) x[static_cast<Eigen::Index>(dof(e, j))] = v[j];
  }
  return x;
}

TraceField TraceSpace::to_field(const Eigen::VectorXd& dofs) const {
  const Index n_edges = edge_dofs_.size() / static_cast<Index>(k_ + 2);
  TraceField f;
  f.continuous = method_ == Method::EDG;
  f.edge_values.resize(n_edges);
  for (Index e = 0; e < n_edges; ++e) {
    f.edge_values[e].resize(k_ + 2);
    for (int j = 0; j < k_ + 2; ++j) f.edge_values[e][j] = dofs[static_cast<Eigen::Index>(dof(e, j))];
  }
  return f;
}

}  // namespace edg
