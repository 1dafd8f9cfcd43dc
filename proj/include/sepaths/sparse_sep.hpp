#pragma once

#include <string>
#include <vector>

#include "sepaths/graph.hpp"
#include "sepaths/hamilton.hpp"
#include "sepaths/path_system.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

// G0: every vertex marks min(deg, ceil(c_mark)) incident edges, smallest-id
// neighbours first. G1: each edge kept with probability c_keep. Returns G0 u G1.
Graph sparsify(const Graph& g, double c_mark, double c_keep, RngSeed seed);

struct BSets {
  VertexSet B0, B1, B2;
};

// B0: isolated vertices, leaves and every vertex on an S-path or S-cycle of
// gprime. B1: greedy maximal W outside B0 with e(gprime[(B0 u W) \ S]) >=
// density |W|, at most y_cap vertices. B2: S-neighbours of B1 outside B0.
BSets compute_B_sets(const Graph& gprime, const VertexSet& S, int y_cap, double density);

struct SparseParams {
  double c_mark = -1;       // negative: max(3, np/10)
  double c_keep = 0.1;
  double s_threshold = -1;  // negative: max(1, np/4)
  double density = -1;      // negative: np/20
  int y_cap = -1;           // negative: ceil(n exp(-3np/2))
  double delta = 0.1;       // reported total (2/3 + delta) n np exp(-np)
  bool strict = false;      // a failed Hamilton path is an error instead of a split
  int singleton_max = 3;    // classes up to this size use trivial paths
  bool split_on_failure = false;  // halve the member set instead of keeping the longest path
  HamiltonBudget ham{3, 1, 14, 2.0, -1};
};

struct SparseMetrics {
  double np = 0;
  double c_mark = 0, c_keep = 0, s_threshold = 0, density = 0;
  int y_cap = 0;
  long long gprime_edges = 0;
  int S = 0, B0 = 0, B1 = 0, B2 = 0;
  int H = 0;
  int guard = 0;  // vertices of H moved to trivial paths (outside the largest component)
  int X0 = 0, X1 = 0;
  int giant_leaves = 0, outside_leaves = 0;
  int F0 = 0, F1 = 0, FS = 0, FU = 0;
  int colors = 0, classes = 0, class_cap = 0;
  int splits = 0;
  int fallbacks = 0;  // failed searches replaced by their longest path
  int missed = 0;     // vertices left off those paths
  int repairs = 0;    // singletons added after verification
  int trivial_members = 0;  // members separated by trivial paths in steps 3-4
  int ham_searches = 0, ham_failures = 0;
  int ham_impossible = 0;  // failures certified by an obstruction
  int lower_bound_leaves = 0;
  int total = 0;
  double paper_total = 0;
};

struct SparsePlan {
  Graph gprime;
  VertexSet S, B0, B1, B2;
  Graph H;
  std::vector<VertexSet> classes;
  PathSystem F0, F1, FS, FU;
};

struct SparseResult {
  PathSystem system;
  SparsePlan plan;
  SparseMetrics metrics;
};

// Throws StrategyFailure("C3") without a giant component; in strict mode a
// failed path search throws StrategyFailure naming step, class and bit.
SparseResult separate_sparse(const Graph& g, RngSeed seed, const SparseParams& params = {});

}  // namespace sepaths
