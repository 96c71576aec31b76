#include "edg/run_config.hpp"

#include <charconv>
#include <sstream>

namespace edg {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view s, std::string_view key) {
  T value{};
  s = trim(s);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error("config: invalid value '" + std::string(s) + "' for " + std::string(key));
  return value;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Method parse_method(std::string_view s) {
  if (s == "edg" || s == "EDG") return Method::EDG;
  if (s == "hdg" || s == "HDG") return Method::HDG;
  throw Error("unknown method '" + std::string(s) + "' (expected edg or hdg)");
}

LinearSolver parse_solver(std::string_view s) {
  if (s == "direct") return LinearSolver::Direct;
  if (s == "cg") return LinearSolver::ConjugateGradient;
  throw Error("unknown solver '" + std::string(s) + "' (expected direct or cg)");
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(parse_number<int>(s.substr(0, comma), "list"));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void RunConfig::validate() const {
  if (k < 0 || k > 2) throw Error("config: k must be 0, 1 or 2");
  if (levels.empty()) throw Error("config: empty refinement list");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 1) throw Error("config: refinement levels must be positive");
    if (i > 0 && levels[i] <= levels[i - 1]) throw Error("config: refinement levels must be strictly increasing");
  }
  if (!(tol > 0.0)) throw Error("config: tol must be positive");
  if (quad_scale != 1 && quad_scale != 2) throw Error("config: quad_scale must be 1 or 2");
  if (mesh == MeshFamily::File && mesh_file.empty()) throw Error("config: mesh file path is empty");
}

std::string RunConfig::mesh_label() const {
  switch (mesh) {
    case MeshFamily::Triangular: return "tri";
    case MeshFamily::Quadrilateral: return "quad";
    case MeshFamily::File: return mesh_file;
  }
  return {};
}

QuadratureOptions RunConfig::quadrature() const {
  const QuadratureOptions q = QuadratureOptions::for_order(k);
  return quad_scale == 2 ? q.doubled() : q;
}

std::string serialize(const RunConfig& c) {
  std::ostringstream os;
  os << "method=" << to_string(c.method) << '\n';
  os << "k=" << c.k << '\n';
  os << "mesh=" << c.mesh_label() << '\n';
  os << "levels=";
  for (std::size_t i = 0; i < c.levels.size(); ++i) os << (i ? "," : "") << c.levels[i];
  os << '\n';
  os << "solver=" << (c.solver == LinearSolver::Direct ? "direct" : "cg") << '\n';
  os << "tol=" << format_double(c.tol) << '\n';
  os << "quad_scale=" << c.quad_scale << '\n';
  os << "threads=" << c.threads << '\n';
  os << "problem=" << c.problem << '\n';
  os << "csv=" << c.csv << '\n';
  os << "md=" << c.md << '\n';
  os << "dump_matrix=" << c.dump_matrix << '\n';
  return os.str();
}

RunConfig parse_run_config(std::string_view text) {
  RunConfig c;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error("config line " + std::to_string(line_no) + ": expected key=value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "method") c.method = parse_method(value);
    else if (key == "k") c.k = parse_number<int>(value, key);
    else if (key == "mesh") {
      if (value == "tri") c.mesh = MeshFamily::Triangular;
      else if (value == "quad") c.mesh = MeshFamily::Quadrilateral;
      else {
        c.mesh = MeshFamily::File;
        c.mesh_file = std::string(value);
      }
    } else if (key == "levels") c.levels = parse_int_list(value);
    else if (key == "solver") c.solver = parse_solver(value);
    else if (key == "tol") c.tol = parse_number<double>(value, key);
    else if (key == "quad_scale") c.quad_scale = parse_number<int>(value, key);
    else if (key == "threads") c.threads = parse_number<unsigned>(value, key);
    else if (key == "problem") c.problem = std::string(value);
    else if (key == "csv") c.csv = std::string(value);
    else if (key == "md") c.md = std::string(value);
    else if (key == "dump_matrix") c.dump_matrix = std::string(value);
    else throw Error("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
  }
  c.validate();
  return c;
}

}  // namespace edg
