#pragma once

#include <limits>
#include <vector>

#include <Eigen/Core>

#include "edg/mesh.hpp"
#include "edg/projection.hpp"

namespace edg {

/// Global numbering of the skeleton unknowns: k+2 Lagrange nodes per edge.
///
/// EDG shares the endpoint nodes of all edges meeting at a vertex; HDG keeps
/// every edge independent. Numbering is deterministic: EDG vertex unknowns
/// first (by vertex id), then edge-interior nodes by edge id and node index;
/// HDG numbers edge by edge. Unknowns on boundary edges are fixed by the
/// Dirichlet data; the rest are "free" and are numbered in the same order.
class TraceSpace {
 public:
  static constexpr Index kFixed = std::numeric_limits<Index>::max();

  static TraceSpace build(const Mesh& mesh, int k, Method method);

  Method method() const { return method_; }
  int k() const { return k_; }
  int nodes_per_edge() const { return k_ + 2; }

  std::size_t n_dofs() const { return boundary_.size(); }
  std::size_t n_free() const { return n_free_; }
  std::size_t n_fixed() const { return n_dofs() - n_free_; }

  Index dof(Index edge, int node) const { return edge_dofs_[edge * static_cast<Index>(k_ + 2) + static_cast<Index>(node)]; }
  bool is_boundary(Index dof) const { return boundary_[dof]; }
  Index free_index(Index dof) const { return free_index_[dof]; }

  /// Global dofs in a cell's local trace layout (slot-major, edge orientation).
  std::vector<Index> cell_dofs(const Mesh& mesh, Index cell) const;

  /// Gathers node values of the edges that carry data into a dof vector.
  Eigen::VectorXd to_dofs(const TraceField& field) const;
  TraceField to_field(const Eigen::VectorXd& dofs) const;

 private:
  Method method_ = Method::EDG;
  int k_ = 0;
  std::size_t n_free_ = 0;
  std::vector<Index> edge_dofs_;
  std::vector<bool> boundary_;
  std::vector<Index> free_index_;
};

inline TraceSpace build_trace_space(const Mesh& mesh, int k, Method method) {
  return TraceSpace::build(mesh, k, method);
}

}  // namespace edg
