#pragma once

#include <cstdint>
#include <vector>

#include "sepaths/graph.hpp"
#include "sepaths/hamilton.hpp"
#include "sepaths/path_system.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

// Vertex ids: u1=0, v1=1, w1=2, u2=3, v2=4, w2=5, x_i=5+i (i in 1..k), y_i=5+k+i (i in 1..l).
struct Gadget {
  Graph g;
  Edge e;      // u1 u2, absent from g
  Graph g_e;   // g with e
  PathSystem fe;
  int n = 0, k = 0, l = 0, q = 0;
};

Gadget build_gadget(int n);

// ceil(2(n-7)/3).
int gadget_lower_bound(int n);
int gadget_lower_bound(const Gadget& gad);

// n/2 + 9 sqrt(n ln ln n).
double min_degree_threshold(int n);

struct MinDegreeParams {
  bool override_threshold = false;
  int attempts = 50;
  HamiltonBudget ham;
};

struct MinDegreeResult {
  PathSystem system;
  int attempts = 0;
  int posa_passes = 0;   // labellings where every set passed the degree condition
  int short_sets = 0;    // sets below 3 vertices
  bool threshold_met = false;
};

// Throws PreconditionViolation("min-degree") below the threshold unless
// overridden, BudgetExhausted naming the set that kept failing.
MinDegreeResult separate_min_degree(const Graph& g, RngSeed seed, const MinDegreeParams& params = {});

}  // namespace sepaths
