#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "sepaths/bitstring.hpp"
#include "sepaths/graph.hpp"
#include "sepaths/path_system.hpp"

namespace sepaths {

struct CodeTable {
  int paths = 0;
  std::vector<Bitstring> codes;  // by vertex id
  std::unordered_map<Bitstring, Vertex, BitstringHash> index;
  std::optional<Vertex> uncovered;  // the vertex on no path, if any
};

// Throws InvalidInput when the system does not separate g.
CodeTable build_code_table(const Graph& g, const PathSystem& sys);

// Bit j set iff the failed vertex lies on path j; none gives the all-zero syndrome.
Bitstring simulate_probe(const Graph& g, const PathSystem& sys, std::optional<Vertex> failed);

enum class DecodeKind { Vertex, NoFailure, Ambiguous };

struct DecodeResult {
  DecodeKind kind = DecodeKind::Ambiguous;
  Vertex vertex = -1;
  std::optional<Vertex> uncovered;  // for NoFailure: the one vertex it cannot be told apart from
};

// Throws InvalidInput on a length mismatch.
DecodeResult decode(const CodeTable& table, const Bitstring& syndrome);

}  // namespace sepaths
