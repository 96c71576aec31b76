#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "edg/types.hpp"

namespace edg {

enum class MeshKind { Simplex, Quadrilateral };

/// Interior trace-unknown count for one (mesh family, method, k, n).
struct DofRow {
  int k = 0;
  int n = 0;
  MeshKind mesh = MeshKind::Simplex;
  Method method = Method::EDG;
  std::size_t computed = 0;
  std::optional<std::size_t> reference;

  bool matches_reference() const { return reference && *reference == computed; }
};

/// Published reference counts for k in {0,1,2}, n in {4,...,64}. Three
/// entries (3936) disagree with the vertex/edge count formula; they are kept
/// verbatim so comparisons flag them.
std::optional<std::size_t> reference_dof_count(MeshKind mesh, Method method, int k, int n);

/// Closed-form count on the uniform n x n meshes:
/// EDG (n-1)^2 + k * interior_edges, HDG (k+2) * interior_edges.
std::size_t formula_dof_count(MeshKind mesh, Method method, int k, int n);

/// Builds every mesh and trace space and reports the free trace unknowns.
std::vector<DofRow> run_dof_comparison(std::span<const int> ks, std::span<const int> ns);

/// Markdown table laid out as k | Mesh | simplex EDG/HDG | quadrilateral EDG/HDG,
/// followed by a list of cells that differ from the reference counts.
void write_dof_table(std::ostream& out, const std::vector<DofRow>& rows);

}  // namespace edg
