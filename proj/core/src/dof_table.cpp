#include "edg/dof_table.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>

#include "edg/mesh.hpp"
#include "edg/trace_space.hpp"

namespace edg {

namespace {

// Rows k = 0,1,2; columns n = 4,8,16,32,64.
using Column = std::array<std::array<std::size_t, 5>, 3>;

constexpr Column kSimplexEdg{{{9, 49, 225, 961, 3936}, {49, 225, 961, 3936, 16129}, {89, 401, 1697, 6977, 28289}}};
constexpr Column kSimplexHdg{
    {{80, 352, 1472, 6016, 24320}, {120, 528, 2208, 9024, 36480}, {160, 704, 2944, 12032, 48640}}};
constexpr Column kQuadEdg{{{9, 49, 225, 961, 3936}, {33, 161, 705, 2945, 12033}, {57, 273, 1185, 4929, 20097}}};
constexpr Column kQuadHdg{{{48, 224, 960, 3968, 16128}, {72, 336, 1440, 5952, 24192}, {96, 448, 1920, 7936, 32256}}};

int level_index(int n) {
  switch (n) {
    case 4: return 0;
    case 8: return 1;
    case 16: return 2;
    case 32: return 3;
    case 64: return 4;
    default: return -1;
  }
}

const char* kind_name(MeshKind m) { return m == MeshKind::Simplex ? "simplex" : "quadrilateral"; }

}  // namespace

std::optional<std::size_t> reference_dof_count(MeshKind mesh, Method method, int k, int n) {
  const int col = level_index(n);
  if (k < 0 || k > 2 || col < 0) return std::nullopt;
  const Column& table = mesh == MeshKind::Simplex ? (method == Method::EDG ? kSimplexEdg : kSimplexHdg)
                                                   : (method == Method::EDG ? kQuadEdg : kQuadHdg);
  return table[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)];
}

std::size_t formula_dof_count(MeshKind mesh, Method method, int k, int n) {
  const auto N = static_cast<std::size_t>(n);
  const std::size_t interior_edges = 2 * N * (N - 1) + (mesh == MeshKind::Simplex ? N * N : 0);
  const auto K = static_cast<std::size_t>(k);
  return method == Method::EDG ? (N - 1) * (N - 1) + K * interior_edges : (K + 2) * interior_edges;
}

std::vector<DofRow> run_dof_comparison(std::span<const int> ks, std::span<const int> ns) {
  std::vector<DofRow> rows;
  for (int k : ks)
    for (int n : ns)
      for (MeshKind kind : {MeshKind::Simplex, MeshKind::Quadrilateral}) {
        const Mesh mesh = kind == MeshKind::Simplex ? generate_uniform_triangular(n) : generate_uniform_quadrilateral(n);
        for (Method method : {Method::EDG, Method::HDG}) {
          DofRow row;
          row.k = k;
          row.n = n;
          row.mesh = kind;
          row.method = method;
          row.computed = TraceSpace::build(mesh, k, method).n_free();
          row.reference = reference_dof_count(kind, method, k, n);
          rows.push_back(row);
        }
      }
  return rows;
}

void write_dof_table(std::ostream& out, const std::vector<DofRow>& rows) {
  std::map<std::pair<int, int>, std::array<const DofRow*, 4>> grid;
  for (const DofRow& r : rows) {
    const std::size_t slot = (r.mesh == MeshKind::Simplex ? 0 : 2) + (r.method == Method::EDG ? 0 : 1);
    grid[{r.k, r.n}][slot] = &r;
  }
  auto cell = [](const DofRow* r) {
    if (!r) return std::string("-");
    std::string s = std::to_string(r->computed);
    if (r->reference && !r->matches_reference()) s += " (ref " + std::to_string(*r->reference) + ")";
    return s;
  };

  out << "| k | Mesh | simplex EDG | simplex HDG | quadrilateral EDG | quadrilateral HDG |\n";
  out << "|---|------|------------:|------------:|------------------:|------------------:|\n";
  int last_k = -1;
  for (const auto& [key, slots] : grid) {
    out << "| " << (key.first != last_k ? std::to_string(key.first) : "") << " | " << key.second << "×" << key.second;
    for (const DofRow* r : slots) out << " | " << cell(r);
    out << " |\n";
    last_k = key.first;
  }

  std::vector<const DofRow*> mismatches;
  for (const DofRow& r : rows)
    if (r.reference && !r.matches_reference()) mismatches.push_back(&r);
  if (!mismatches.empty()) {
    out << "\nMismatches against the reference table:\n";
    for (const DofRow* r : mismatches)
      out << "- " << kind_name(r->mesh) << ' ' << (r->method == Method::EDG ? "EDG" : "HDG") << " k=" << r->k
          << " n=" << r->n << ": computed " << r->computed << ", reference " << *r->reference << '\n';
  }
}

}  // namespace edg
