#include "edg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace edg {

namespace {

double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

double polygon_diameter(std::span<const Point> poly) {
  double d = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    for (std::size_t j = i + 1; j < poly.size(); ++j) d = std::max(d, (poly[i] - poly[j]).norm());
  return d;
}

[[noreturn]] void fail_cell(Index c, const std::string& why) {
  std::ostringstream os;
  os << "cell " << c << ": " << why;
  throw MeshError(os.str());
}

}  // namespace

double signed_area(std::span<const Point> polygon) {
  double a = 0.0;
  const std::size_t m = polygon.size();
  for (std::size_t i = 0; i < m; ++i) a += cross(polygon[i], polygon[(i + 1) % m]);
  return 0.5 * a;
}

double triangle_area(const Triangle& t) { return 0.5 * cross(t[1] - t[0], t[2] - t[0]); }

std::vector<Triangle> sub_triangulate(std::span<const Point> polygon, const Point& star_point) {
  if (polygon.size() < 3) throw MeshError("sub_triangulate: polygon needs at least 3 vertices");
  const double diam = polygon_diameter(polygon);
  const double area = signed_area(polygon);
  if (!(diam > 0.0) || std::abs(area) <= 1e-14 * diam * diam)
    throw MeshError("sub_triangulate: degenerate polygon (zero area)");

  std::vector<Triangle> tris;
  tris.reserve(polygon.size());
  const std::size_t m = polygon.size();
  for (std::size_t i = 0; i < m; ++i) {
    Triangle t{star_point, polygon[i], polygon[(i + 1) % m]};
    if (!(triangle_area(t) > 1e-14 * diam * diam))
      throw MeshError("sub_triangulate: star point does not see every edge (nonconvex or exterior)");
    tris.push_back(t);
  }
  return tris;
}

Mesh Mesh::from_polygons(std::vector<Point> vertices, const std::vector<std::vector<Index>>& cells) {
  Mesh mesh;
  mesh.vertices_.reserve(vertices.size());
  for (Index i = 0; i < vertices.size(); ++i) {
    if (!std::isfinite(vertices[i].x()) || !std::isfinite(vertices[i].y()))
      throw MeshError("vertex " + std::to_string(i) + " has non-finite coordinates");
    mesh.vertices_.push_back({i, vertices[i]});
  }

  // (min, max) vertex pair -> edge id
  std::map<std::pair<Index, Index>, Index> edge_lookup;

  mesh.cells_.reserve(cells.size());
  for (Index c = 0; c < cells.size(); ++c) {
    const auto& ids = cells[c];
    if (ids.size() < 3) fail_cell(c, "fewer than 3 vertices");
    for (Index v : ids)
      if (v >= mesh.vertices_.size()) fail_cell(c, "vertex index out of range");

    Cell cell;
    cell.id = c;
    cell.vertex_ids = ids;
    const std::vector<Point> poly = [&] {
      std::vector<Point> p;
      for (Index v : ids) p.push_back(mesh.vertices_[v].position);
      return p;
    }();
    const std::size_t m = poly.size();

    cell.diameter = polygon_diameter(poly);
    cell.area = signed_area(poly);
    if (!(cell.diameter > 0.0) || cell.area <= 1e-14 * cell.diameter * cell.diameter)
      fail_cell(c, "degenerate or clockwise polygon");
    for (std::size_t i = 0; i < m; ++i) {
      const Point& a = poly[(i + m - 1) % m];
      const Point& b = poly[i];
      const Point& d = poly[(i + 1) % m];
      if ((b - a).norm() <= 1e-14 * cell.diameter) fail_cell(c, "repeated vertex");
      if (cross(b - a, d - b) < -1e-12 * cell.diameter * cell.diameter) fail_cell(c, "polygon is not convex");
    }

    cell.star_point = Point::Zero();
    for (const Point& p : poly) cell.star_point += p;
    cell.star_point /= static_cast<double>(m);

    try {
      cell.sub_triangles = sub_triangulate(poly, cell.star_point);
    } catch (const MeshError& e) {
      fail_cell(c, e.what());
    }

    for (std::size_t i = 0; i < m; ++i) {
      const Index a = ids[i];
      const Index b = ids[(i + 1) % m];
      if (a == b) fail_cell(c, "repeated vertex");
      const auto key = std::minmax(a, b);
      auto it = edge_lookup.find({key.first, key.second});
      if (it == edge_lookup.end()) {
        const Index e = mesh.edges_.size();
        const Point t = mesh.vertices_[b].position - mesh.vertices_[a].position;
        SkeletonEdge edge;
        edge.id = e;
        edge.endpoint_ids = {a, b};
        edge.left_cell = c;
        edge.length = t.norm();
        edge.unit_normal = Point(t.y(), -t.x()) / edge.length;
        mesh.edges_.push_back(edge);
        edge_lookup.emplace(std::pair{key.first, key.second}, e);
        cell.edge_ids.push_back(e);
        cell.edge_aligned.push_back(true);
      } else {
        SkeletonEdge& edge = mesh.edges_[it->second];
        if (edge.right_cell)
          fail_cell(c, "edge " + std::to_string(edge.id) + " shared by more than two cells");
        if (edge.endpoint_ids[0] != b)
          fail_cell(c, "edge " + std::to_string(edge.id) + " traversed in the same direction by two cells");
        edge.right_cell = c;
        cell.edge_ids.push_back(edge.id);
        cell.edge_aligned.push_back(false);
      }
    }

    mesh.h_ = std::max(mesh.h_, cell.diameter);
    mesh.regularity_ = std::max(mesh.regularity_, cell.diameter * cell.diameter / cell.area);
    mesh.cells_.push_back(std::move(cell));
  }

  mesh.boundary_vertex_.assign(mesh.vertices_.size(), false);
  for (const auto& e : mesh.edges_)
    if (e.is_boundary()) {
      mesh.boundary_vertex_[e.endpoint_ids[0]] = true;
      mesh.boundary_vertex_[e.endpoint_ids[1]] = true;
    }
  return mesh;
}

std::size_t Mesh::n_interior_edges() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const SkeletonEdge& e) { return !e.is_boundary(); }));
}

std::size_t Mesh::n_interior_vertices() const {
  return static_cast<std::size_t>(std::count(boundary_vertex_.begin(), boundary_vertex_.end(), false));
}

std::vector<Point> Mesh::cell_polygon(Index c) const {
  std::vector<Point> poly;
  poly.reserve(cells_[c].vertex_ids.size());
  for (Index v : cells_[c].vertex_ids) poly.push_back(vertices_[v].position);
  return poly;
}

Point Mesh::outward_normal(Index c, std::size_t slot) const {
  const Point& n = edges_[cells_[c].edge_ids[slot]].unit_normal;
  return cells_[c].edge_aligned[slot] ? n : Point(-n);
}

Mesh generate_uniform_triangular(int n) {
  if (n < 1) throw MeshError("generate_uniform_triangular: n must be >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) pts.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
  auto id = [n](int i, int j) { return static_cast<Index>(j * (n + 1) + i); };

  std::vector<std::vector<Index>> cells;
  cells.reserve(static_cast<std::size_t>(2 * n * n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      cells.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return Mesh::from_polygons(std::move(pts), cells);
}

Mesh generate_uniform_quadrilateral(int n) {
  if (n < 1) throw MeshError("generate_uniform_quadrilateral: n must be >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) pts.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
  auto id = [n](int i, int j) { return static_cast<Index>(j * (n + 1) + i); };

  std::vector<std::vector<Index>> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
  return Mesh::from_polygons(std::move(pts), cells);
}

bool RegularityReport::all_pass() const {
  return std::all_of(star_shaped.begin(), star_shaped.end(), [](bool b) { return b; }) &&
         std::all_of(vertex_spacing.begin(), vertex_spacing.end(), [](bool b) { return b; });
}

RegularityReport validate_regularity(const Mesh& mesh, double theta, double min_spacing) {
  RegularityReport report;
  report.star_shaped.reserve(mesh.n_cells());
  report.vertex_spacing.reserve(mesh.n_cells());
  for (const Cell& cell : mesh.cells()) {
    const auto poly = mesh.cell_polygon(cell.id);
    const std::size_t m = poly.size();

    // For a convex cell the ball lies inside T iff it stays behind every edge line.
    double clearance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const Point t = poly[(i + 1) % m] - poly[i];
      clearance = std::min(clearance, cross(t, cell.star_point - poly[i]) / t.norm());
    }
    report.star_shaped.push_back(clearance >= theta * cell.diameter);

    double spacing = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) spacing = std::min(spacing, (poly[i] - poly[j]).norm());
    report.vertex_spacing.push_back(spacing >= min_spacing * cell.diameter);
  }
  return report;
}

}  // namespace edg
