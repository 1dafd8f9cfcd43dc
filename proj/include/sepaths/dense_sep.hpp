#pragma once

#include <vector>

#include "sepaths/graph.hpp"
#include "sepaths/hamilton.hpp"
#include "sepaths/path_system.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

// Current indistinguishability classes.
struct CliquePartition {
  std::vector<VertexSet> classes;
};

struct SplitBudget {
  int resamples_per_vertex = 20;
  int restarts = 20;
};

// Balanced S with |S| = ceil(n/2), |S cap C| within one half of |C| for each
// class, and every vertex with at least d/2 - t neighbours in S (members of S
// additionally need 2 once |S| >= 3). Throws BudgetExhausted.
VertexSet halving_split(const Graph& g, const CliquePartition& part, double d, double t,
                        RngSeed seed, const SplitBudget& budget = {});

struct DenseParams {
  double d = -1;  // negative: minimum degree
  double t = -1;  // negative: d/4
  SplitBudget split;
  int attempts_per_round = 20;
  HamiltonBudget ham;
};

struct DenseRound {
  int size = 0;
  bool closed = false;  // false only for sets of fewer than 3 vertices
  int attempts = 0;
};

struct DenseResult {
  PathSystem system;
  std::vector<DenseRound> rounds;
  double d = 0;
  double t = 0;
  int short_sets = 0;
};

DenseResult separate_dense(const Graph& g, RngSeed seed, const DenseParams& params = {});

}  // namespace sepaths
