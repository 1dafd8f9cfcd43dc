#include "sepaths/faultmon.hpp"

#include "sepaths/errors.hpp"

namespace sepaths {

CodeTable build_code_table(const Graph& g, const PathSystem& sys) {
  auto rep = verify_separation(g, sys);
  if (!rep.separates) throw InvalidInput("path system does not separate the graph");
  CodeTable t;
  t.paths = static_cast<int>(sys.size());
  t.codes = std::move(rep.codes);
  for (Vertex v : g.vertices()) {
    if (t.codes[v].none()) t.uncovered = v;
    t.index.emplace(t.codes[v], v);
  }
  return t;
}

Bitstring simulate_probe(const Graph& g, const PathSystem& sys, std::optional<Vertex> failed) {
  Bitstring s(static_cast<int>(sys.size()));
  if (!failed) return s;
  g.require(*failed);
  for (std::size_t j = 0; j < sys.size(); ++j)
    for (Vertex v : sys.paths[j].vertices)
      if (v == *failed) {
        s.set(static_cast<int>(j));
        break;
      }
  return s;
}

DecodeResult decode(const CodeTable& table, const Bitstring& syndrome) {
  if (syndrome.size() != table.paths)
    throw InvalidInput("syndrome has " + std::to_string(syndrome.size()) + " bits, expected " +
                       std::to_string(table.paths));
  DecodeResult r;
  if (syndrome.none()) {
    r.kind = DecodeKind::NoFailure;
    r.uncovered = table.uncovered;
    return r;
  }
  auto it = table.index.find(syndrome);
  if (it == table.index.end()) return r;
  r.kind = DecodeKind::Vertex;
  r.vertex = it->second;
  return r;
}

}  // namespace sepaths
