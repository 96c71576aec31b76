#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "edg/types.hpp"

namespace edg {

struct Vertex {
  Index id;
  Point position;
};

using Triangle = std::array<Point, 3>;

/// Convex polygonal cell, vertices counter-clockwise.
///
/// `edge_ids[i]` is the skeleton edge joining `vertex_ids[i]` and
/// `vertex_ids[i+1]`; `edge_aligned[i]` is true when the cell traverses that
/// edge in its stored direction (i.e. the cell is the edge's left cell).
struct Cell {
  Index id;
  std::vector<Index> vertex_ids;
  std::vector<Index> edge_ids;
  std::vector<bool> edge_aligned;
  Point star_point;
  double diameter;
  double area;
  std::vector<Triangle> sub_triangles;

  std::size_t n_edges() const { return vertex_ids.size(); }
};

struct SkeletonEdge {
  Index id;
  std::array<Index, 2> endpoint_ids;
  Index left_cell;
  std::optional<Index> right_cell;
  double length;
  Point unit_normal;  // outward from left_cell

  bool is_boundary() const { return !right_cell.has_value(); }
};

/// Conforming polygonal mesh of a planar domain. Immutable after construction.
class Mesh {
 public:
  /// Builds topology from vertex coordinates and counter-clockwise cell loops.
  /// Throws MeshError on degenerate, clockwise, nonconvex, or nonconforming input.
  static Mesh from_polygons(std::vector<Point> vertices,
                            const std::vector<std::vector<Index>>& cells);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Cell> cells() const { return cells_; }
  std::span<const SkeletonEdge> edges() const { return edges_; }

  const Vertex& vertex(Index i) const { return vertices_[i]; }
  const Cell& cell(Index i) const { return cells_[i]; }
  const SkeletonEdge& edge(Index i) const { return edges_[i]; }

  std::size_t n_vertices() const { return vertices_.size(); }
  std::size_t n_cells() const { return cells_.size(); }
  std::size_t n_edges() const { return edges_.size(); }
  std::size_t n_interior_edges() const;
  std::size_t n_interior_vertices() const;

  bool is_boundary_vertex(Index v) const { return boundary_vertex_[v]; }

  /// Maximum cell diameter.
  double h() const { return h_; }
  /// max h_T^2 / |T|
  double regularity() const { return regularity_; }

  /// Polygon coordinates of a cell in counter-clockwise order.
  std::vector<Point> cell_polygon(Index c) const;

  /// Outward unit normal of cell `c` on its local edge slot `slot`.
  Point outward_normal(Index c, std::size_t slot) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Cell> cells_;
  std::vector<SkeletonEdge> edges_;
  std::vector<bool> boundary_vertex_;
  double h_ = 0.0;
  double regularity_ = 0.0;
};

/// n x n squares on [0,1]^2, each cut by its lower-left to upper-right diagonal.
Mesh generate_uniform_triangular(int n);

/// n x n squares on [0,1]^2.
Mesh generate_uniform_quadrilateral(int n);

/// Fans a convex polygon from `star_point`: one triangle per polygon edge.
/// Throws MeshError when the polygon has (numerically) zero area.
std::vector<Triangle> sub_triangulate(std::span<const Point> polygon, const Point& star_point);

double signed_area(std::span<const Point> polygon);
double triangle_area(const Triangle& t);

struct RegularityReport {
  std::vector<bool> star_shaped;   // ball of radius theta*h_T around M_T inside T
  std::vector<bool> vertex_spacing;  // all vertex pairs at least l*h_T apart

  bool all_pass() const;
};

/// Checks the star-shapedness and vertex-spacing shape-regularity conditions
/// cell by cell. Failures are reported, not thrown.
RegularityReport validate_regularity(const Mesh& mesh, double theta, double min_spacing);

}  // namespace edg
