#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepaths/graph.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

struct HamiltonBudget {
  int rotations_per_vertex = 50;
  int restarts = 20;
  int exact_cap = 14;  // exhaustive search at or below this order
  // Booster mode: rotations without progress before a booster is sought, per vertex.
  double stall_per_vertex = 2.0;
  int max_boosters = -1;  // -1: order of the graph
};

enum class HamiltonStatus { Found, Impossible, Exhausted };

struct HamiltonResult {
  HamiltonStatus status = HamiltonStatus::Exhausted;
  VertexPath path;     // the cycle (closing edge implicit) or the path
  VertexPath longest;  // longest path met during the search
  std::string reason;
  int restarts = 0;
  long long rotations = 0;
  std::vector<Edge> boosters;
  bool found() const { return status == HamiltonStatus::Found; }
};

HamiltonResult hamilton_cycle(const Graph& g, RngSeed seed, const HamiltonBudget& budget = {});
// Free endpoints.
HamiltonResult hamilton_path(const Graph& g, RngSeed seed, const HamiltonBudget& budget = {});
// Rotation-extension without certification or exhaustive search; `longest`
// holds the best path even when no Hamilton path exists.
HamiltonResult longest_path(const Graph& g, RngSeed seed, const HamiltonBudget& budget = {});
HamiltonResult hamilton_path_endpoints(const Graph& g, Vertex x, Vertex y, RngSeed seed,
                                       const HamiltonBudget& budget = {});

// Rotation-extension on `sparse`; when stuck, edges of `host` between
// rotation endpoints (or from an endpoint to an unvisited vertex) are added
// as boosters, edges inside `preferred` first. `sparse` must be a spanning
// subgraph of `host`.
HamiltonResult booster_hamilton_cycle(const Graph& host, const Graph& sparse, RngSeed seed,
                                      const HamiltonBudget& budget,
                                      const VertexSet& preferred = {});

// Exhaustive search (order at most 20).
std::optional<VertexPath> exact_hamilton_cycle(const Graph& g);
std::optional<VertexPath> exact_hamilton_path(const Graph& g);

// Certified reasons a graph has no Hamilton cycle / path (nullopt: none found).
std::optional<std::string> cycle_obstruction(const Graph& g);
std::optional<std::string> path_obstruction(const Graph& g);

bool posa_check(const Graph& g);

}  // namespace sepaths
