#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepaths/bitstring.hpp"
#include "sepaths/graph.hpp"

namespace sepaths {

// A path of the host graph; closed marks a cycle (last vertex adjacent to the first).
struct SeparatingPath {
  VertexPath vertices;
  bool closed = false;
  friend bool operator==(const SeparatingPath&, const SeparatingPath&) = default;
};

struct PathSystem {
  std::vector<SeparatingPath> paths;

  std::size_t size() const { return paths.size(); }
  bool empty() const { return paths.empty(); }
  void add(VertexPath p, bool closed = false) { paths.push_back({std::move(p), closed}); }
  void append(const PathSystem& other) {
    paths.insert(paths.end(), other.paths.begin(), other.paths.end());
  }
  friend bool operator==(const PathSystem&, const PathSystem&) = default;
};

struct SeparationReport {
  bool separates = false;
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::vector<Bitstring> codes;  // indexed by vertex id; empty bitstrings for absent ids
};

// Throws InvalidPath naming the first malformed entry.
void validate_paths(const Graph& g, const PathSystem& sys);
SeparationReport verify_separation(const Graph& g, const PathSystem& sys);

int lower_bound_log(std::int64_t n);
int lower_bound_leaves(const Graph& g);

struct OracleLimits {
  int max_vertices = 8;
  std::uint64_t max_nodes = 20'000'000;
};

struct OracleResult {
  int size = 0;
  PathSystem witness;
  std::uint64_t nodes = 0;
  std::size_t distinct_paths = 0;
};

// Minimum separating path system by branch and bound. Throws InvalidInput
// above the vertex cap, BudgetExhausted past the node budget.
OracleResult exact_sp(const Graph& g, const OracleLimits& limits = {});

PathSystem read_path_system(std::istream& in);
void write_path_system(std::ostream& out, const PathSystem& sys);
PathSystem load_path_system(const std::string& file);
void save_path_system(const std::string& file, const PathSystem& sys);

}  // namespace sepaths
