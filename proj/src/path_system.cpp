#include "sepaths/path_system.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sepaths/errors.hpp"
#include "sepaths/kernels.hpp"

namespace sepaths {

void validate_paths(const Graph& g, const PathSystem& sys) {
  std::vector<std::size_t> stamp(g.id_space(), 0);
  for (std::size_t i = 0; i < sys.paths.size(); ++i) {
    const auto& p = sys.paths[i].vertices;
    if (p.empty()) throw InvalidPath(i, "empty path");
    for (std::size_t k = 0; k < p.size(); ++k) {
      Vertex v = p[k];
      if (!g.contains(v)) throw InvalidPath(i, "vertex " + std::to_string(v) + " not in graph");
      if (stamp[v] == i + 1) throw InvalidPath(i, "vertex " + std::to_string(v) + " repeated");
      stamp[v] = i + 1;
      if (k > 0 && !g.adjacent(p[k - 1], v))
        throw InvalidPath(i, "non-edge " + std::to_string(p[k - 1]) + "-" + std::to_string(v));
    }
    if (sys.paths[i].closed) {
      if (p.size() < 3) throw InvalidPath(i, "closed entry shorter than 3");
      if (!g.adjacent(p.front(), p.back())) throw InvalidPath(i, "missing closing edge");
    }
  }
}

SeparationReport verify_separation(const Graph& g, const PathSystem& sys) {
  validate_paths(g, sys);
  std::vector<VertexPath> sets;
  sets.reserve(sys.size());
  for (const auto& p : sys.paths) sets.push_back(p.vertices);
  SeparationReport r;
  r.codes = membership_codes_parallel(g.id_space(), sets);
  r.witness = first_collision(g.vertices(), r.codes);
  r.separates = !r.witness.has_value();
  return r;
}

int lower_bound_log(std::int64_t n) {
  if (n < 1) throw InvalidInput("n must be positive");
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
}

int lower_bound_leaves(const Graph& g) {
  int leaves = 0;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 1) ++leaves;
  if (leaves == 0) return 0;
  return (2 * (leaves - 1) + 2) / 3;
}

PathSystem read_path_system(std::istream& in) {
  PathSystem sys;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    SeparatingPath p;
    bool any = false;
    while (ls >> tok) {
      if (p.closed) throw InvalidInput("line " + std::to_string(lineno) + ": token after `*`");
      if (tok == "*") {
        p.closed = true;
        continue;
      }
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0 || v > std::numeric_limits<Vertex>::max())
          throw std::invalid_argument(tok);
        p.vertices.push_back(static_cast<Vertex>(v));
      } catch (const std::logic_error&) {
        throw InvalidInput("line " + std::to_string(lineno) + ": bad token `" + tok + "`");
      }
      any = true;
    }
    if (p.closed && !any) throw InvalidInput("line " + std::to_string(lineno) + ": lone `*`");
    if (any) sys.paths.push_back(std::move(p));
  }
  return sys;
}

void write_path_system(std::ostream& out, const PathSystem& sys) {
  for (const auto& p : sys.paths) {
    for (std::size_t k = 0; k < p.vertices.size(); ++k) out << (k ? " " : "") << p.vertices[k];
    if (p.closed) out << " *";
    out << '\n';
  }
}

PathSystem load_path_system(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file);
  return read_path_system(in);
}

void save_path_system(const std::string& file, const PathSystem& sys) {
  std::ofstream out(file);
  if (!out) throw InvalidInput("cannot write " + file);
  write_path_system(out, sys);
}

}  // namespace sepaths
