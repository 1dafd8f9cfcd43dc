#pragma once

#include <map>
#include <vector>

#include "sepaths/bitstring.hpp"
#include "sepaths/graph.hpp"
#include "sepaths/hamilton.hpp"
#include "sepaths/path_system.hpp"
#include "sepaths/reduced_core.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

// ceil(log2(n)/2 + C ln ln n).
int critical_ell(std::int64_t n, double C);

struct CodeAssignment {
  int ell = 0;
  double C = 0;
  int C1 = 0;
  std::vector<Bitstring> vectors;  // by index 0..n-1, length 2*ell, weight ell
  std::vector<std::vector<int>> sets;  // S_j as sorted indices
  int sampled = 0;
  int survivors = 0;
  bool override_constants = false;  // C >= 3*C1 >= 12 not met
};

// Samples N = n + ceil(n / (ln n)^3) weight-ell vectors and deletes those with
// another vector within Hamming distance C1. Indices in `reserved` receive
// vectors drawn before the deletion. Throws StrategyFailure("code_assign")
// when too few survive.
CodeAssignment code_assign(int n, double C, int C1, RngSeed seed,
                           const std::vector<int>& reserved = {});

// Members of S with at least 3 neighbours in S, or 2 neighbours in S that
// each have degree at least 2 in G[S].
VertexSet core_membership_rule(const Graph& g, const VertexSet& S);

struct DegreeStats {
  std::map<int, long long> X;   // degree -> count
  std::map<int, double> model;  // n_k for k in [0, K1]
  int K0 = 0;
  int K1 = 0;
  std::vector<int> flagged;  // k in [K0, K1] with |X_k - n_k| > n_k / ln n_k
};

DegreeStats degree_stats(const Graph& g, double p, int K1 = -1);

struct CriticalParams {
  double C = 12;
  int C1 = 4;
  double cutoff = -1;  // negative: max(3, ln n / 10)
  bool strict = false;  // no fallbacks: every coordinate needs a Hamilton cycle or path
  bool leaf_pairing = false;
  double reduction_D = 1;
  int fallback_restarts = 4;  // longest-path restarts for cores without a Hamilton cycle or path
  HamiltonBudget ham;
  ReductionBudget reduction;
};

struct CriticalMetrics {
  int ell = 0;
  int X0 = 0;
  int X1 = 0;
  int giant_leaves = 0;
  int outside_leaves = 0;
  int leaf_paths = 0;
  int isolated_paths = 0;
  int core_cycles = 0;
  int core_paths = 0;
  int core_fallbacks = 0;
  int uncovered = 0;  // core vertices missed by fallback paths, summed over coordinates
  int empty_cores = 0;
  int C1_used = 0;
  int shortfalls = 0;
  bool override_constants = false;
  double rule_mismatch_rate = 0;
  bool domination_ok = true;
  bool high_degree_distinct = true;
  int high_degree_checked = 0;
  int eligible_leaves = 0;
  int matching_size = 0;
  int upgraded = 0;
  int savings = 0;
  int reverted = 0;
  int extended = 0;  // path ends that took a colliding vertex
  int repairs = 0;
  int bound = 0;  // 2 ell + X0 + ceil(2 X1 / 3)
};

struct CriticalResult {
  PathSystem system;
  CodeAssignment codes;
  std::vector<Bitstring> core_codes;  // y by index, bit j = membership in the j-th core path
  CriticalMetrics metrics;
};

CriticalResult separate_critical(const Graph& g, RngSeed seed, const CriticalParams& params = {});

struct LeafTriplets {
  PathSystem paths;
  int giant = 0;
  int outside = 0;
};

// Consecutive triplets of giant-component leaves joined by shortest paths,
// remainder and non-giant leaves as needed.
LeafTriplets separate_leaves(const Graph& g, const VertexSet& leaves);

}  // namespace sepaths
