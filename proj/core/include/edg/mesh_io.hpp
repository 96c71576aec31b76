#pragma once

#include <filesystem>
#include <iosfwd>

#include "edg/mesh.hpp"

namespace edg {

// Plain-text polygon mesh:
//   nv nc
//   x y                      (nv lines)
//   m v0 v1 ... v(m-1)       (nc lines, counter-clockwise, 0-based)
// Edges and topology are derived on load.

Mesh read_mesh(std::istream& in);
Mesh read_mesh(const std::filesystem::path& path);

void write_mesh(std::ostream& out, const Mesh& mesh);

}  // namespace edg
