#include "edg/mesh_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

namespace edg {

Mesh read_mesh(std::istream& in) {
  long long nv = -1, nc = -1;
  if (!(in >> nv >> nc) || nv < 3 || nc < 1) throw MeshError("mesh file: bad header, expected 'nv nc'");

  std::vector<Point> vertices(static_cast<std::size_t>(nv));
  for (auto& p : vertices)
    if (!(in >> p.x() >> p.y())) throw MeshError("mesh file: truncated vertex block");

  std::vector<std::vector<Index>> cells(static_cast<std::size_t>(nc));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    long long m = 0;
    if (!(in >> m) || m < 3) throw MeshError("mesh file: bad vertex count for cell " + std::to_string(c));
    cells[c].resize(static_cast<std::size_t>(m));
    for (auto& v : cells[c]) {
      long long id = -1;
      if (!(in >> id)) throw MeshError("mesh file: truncated cell " + std::to_string(c));
      if (id < 0 || id >= nv) throw MeshError("mesh file: vertex index out of range in cell " + std::to_string(c));
      v = static_cast<Index>(id);
    }
  }
  return Mesh::from_polygons(std::move(vertices), cells);
}

Mesh read_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file " + path.string());
  return read_mesh(in);
}

void write_mesh(std::ostream& out, const Mesh& mesh) {
  out << mesh.n_vertices() << ' ' << mesh.n_cells() << '\n';
  out << std::setprecision(17);
  for (const auto& v : mesh.vertices()) out << v.position.x() << ' ' << v.position.y() << '\n';
  for (const auto& c : mesh.cells()) {
    out << c.vertex_ids.size();
    for (Index v : c.vertex_ids) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace edg
