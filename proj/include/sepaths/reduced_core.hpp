#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepaths/graph.hpp"
#include "sepaths/hamilton.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

struct ReplacementRecord {
  enum class Kind { Endpoints, Contraction };
  Kind kind = Kind::Contraction;
  Vertex new_vertex = -1;
  Vertex a = -1;  // u1 or u'
  Vertex b = -1;  // u2 or v'
  VertexPath path;  // (x1, x2) for Endpoints, P_uv oriented u -> v otherwise
  std::vector<Edge> removed_edges;
};

struct ReducedCore {
  Graph hstar;
  VertexSet s_star, t_star, u_star;
  std::vector<ReplacementRecord> log;
  Graph host;
  Vertex x1 = -1, x2 = -1;
  double D = 0;
};

struct ReductionOptions {
  int span = 100;  // C1/C2 subgraph bound
  int min_endpoint_distance = 8;
  std::optional<Vertex> u1, u2;  // neighbours of x1, x2; smallest valid ids otherwise
};

// Throws PreconditionViolation naming the failed property (2-core, C1, C2, C4, C5,
// T-degree, u-choice, count, replay).
ReducedCore build_reduced_core(const Graph& h, double D, Vertex x1, Vertex x2,
                               const ReductionOptions& opt = {});

// Undoes the log on hstar; equals host for a consistent core.
Graph replay_log(const ReducedCore& rc);

struct Sparsification {
  Graph fstar;
  double D = 0;
  bool mindeg_ok = true;
  bool neighbor_ok = true;
  std::optional<Vertex> neighbor_witness;
};

// Each vertex keeps min(deg, D) random incident edges; the union is returned.
Sparsification d_sparsify(const ReducedCore& rc, double D, RngSeed seed);

// Hamilton (x1, x2)-path of the host from a Hamilton cycle of hstar.
VertexPath lift_cycle(const ReducedCore& rc, const VertexPath& cycle);

struct LiftCounters {
  std::uint64_t lifts = 0;
  std::uint64_t lift_failures = 0;
  std::uint64_t builds = 0;
  std::uint64_t replay_failures = 0;
};
LiftCounters lift_counters();
void reset_lift_counters();

struct ReductionBudget {
  int sparsify_attempts = 5;
  double sparsify_D = 5;
  int expansion_samples = 200;
  int uv_alternatives = 4;  // extra (u1, u2) choices tried after the default
  HamiltonBudget ham;
};

struct ReductionOutcome {
  std::optional<VertexPath> path;
  std::string stage;  // failing stage when no path
  std::string detail;
  int sparsify_attempts = 0;
  int boosters = 0;
  int uv_tried = 0;
  bool expansion_flag = false;  // a sparsification passed without the sampled check
};

// Throws PreconditionViolation when the inputs are rejected.
ReductionOutcome hamilton_path_via_reduction(const Graph& h, double D, Vertex x1, Vertex x2,
                                             RngSeed seed, const ReductionBudget& budget = {},
                                             const ReductionOptions& opt = {});

}  // namespace sepaths
