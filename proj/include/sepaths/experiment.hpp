#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sepaths/constants.hpp"
#include "sepaths/graph.hpp"
#include "sepaths/rng.hpp"
#include "sepaths/strategy.hpp"

namespace sepaths {

// Edge rule: "ln:c" (p = c ln n / n), "np:c" (p = c / n), "p:x", "d:k" (regular degree).
struct EdgeRule {
  enum class Kind { LogFactor, MeanDegree, Probability, Degree };
  Kind kind = Kind::LogFactor;
  double value = 1;
  static EdgeRule parse(const std::string& text);
  std::string to_string() const;
  double probability(int n) const;  // for gnp
};

struct ExperimentSpec {
  std::string model = "gnp";  // gnp | regular
  std::vector<int> n_list;
  EdgeRule rule;
  Strategy strategy = Strategy::Auto;
  int trials = 1;
  RngSeed seed = 1;
  bool timing = false;  // false: wall_ms written as 0 for byte-identical reruns
  int workers = 0;      // 0: OpenMP default
};

struct TrialRow {
  int n = 0;
  double param = 0;  // p or d
  std::string strategy;
  int trial = 0;
  RngSeed seed = 0;
  bool success = false;
  int system_size = 0;
  int log_bound = 0;
  int leaf_bound = 0;
  int X0 = 0, X1 = 0;
  long long wall_ms = 0;
  std::string error;
  std::string diagnostics;  // JSON object
};

struct ExperimentReport {
  std::vector<TrialRow> rows;  // ordered by (n, trial)
};

Graph experiment_instance(const ExperimentSpec& spec, int n, RngSeed seed);
ExperimentReport run_experiment(const ExperimentSpec& spec, const Constants& c = {});

// Columns: kind,n,param,strategy,trial,seed,success,system_size,log_bound,leaf_bound,X0,X1,wall_ms,error
// One trial row per run, then one summary row per n (success = rate, sizes = means over successes).
void write_csv(std::ostream& out, const ExperimentReport& rep);
void write_jsonl(std::ostream& out, const ExperimentReport& rep);

}  // namespace sepaths
