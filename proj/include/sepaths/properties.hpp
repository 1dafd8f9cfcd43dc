#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepaths/graph.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

struct ExpanderOptions {
  int exhaustive_cap = 3;
  int samples = 2000;
  RngSeed seed = 1;
};

struct ExpanderVerdict {
  bool violation = false;
  bool certified = false;  // true: exhaustive below the cap, or a genuine witness
  VertexSet witness;
  int witness_neighbors = 0;
  std::string label;  // "certified-failure", "exhaustive-pass", "no-violation-found (heuristic)"
};

// (alpha, N)-expansion: every S with |S| <= N has |N(S) \ S| >= alpha |S|.
ExpanderVerdict expander_check(const Graph& g, double alpha, int N, const ExpanderOptions& opt = {});
int outer_neighbors(const Graph& g, const VertexSet& s);

struct PropertyVerdict {
  std::string name;
  bool passed = true;
  bool exact = true;
  VertexSet witness;
  int samples = 0;
  std::string detail;
};

struct PropertyReport {
  std::vector<PropertyVerdict> verdicts;
  const PropertyVerdict* find(const std::string& name) const;
  bool passed(const std::string& name) const;
};

struct PropertyOptions {
  std::vector<std::string> which = {"C1", "C2", "C3"};
  int span = 100;  // |R| bound in C1/C2
  int samples = 200;
  RngSeed seed = 1;
};

// C1, C2 exact via bounded searches around S(D); C3 exact; C6-C8 sampled; B2 exact.
PropertyReport check_structural_properties(const Graph& g, double D, const PropertyOptions& opt = {});

PropertyVerdict check_C1(const Graph& g, double D, int span);
PropertyVerdict check_C2(const Graph& g, double D, int span);
PropertyVerdict check_C3(const Graph& g);
PropertyVerdict check_C6(const Graph& g, int samples, RngSeed seed);
PropertyVerdict check_C7(const Graph& g, double D, int samples, RngSeed seed);
PropertyVerdict check_C8(const Graph& g, int samples, RngSeed seed);
PropertyVerdict check_B2(const Graph& g);

}  // namespace sepaths
