#pragma once

#include <string>

#include "sepaths/critical_sep.hpp"
#include "sepaths/dense_sep.hpp"
#include "sepaths/extremal.hpp"
#include "sepaths/reduced_core.hpp"
#include "sepaths/sparse_sep.hpp"

namespace sepaths {

// Regime boundaries for the auto strategy (heuristic).
struct AutoThresholds {
  int oracle_max_n = 8;
  double dense_factor = 1.5;     // np >= dense_factor * ln n: dense
  double critical_factor = 0.8;  // np >= critical_factor * ln n: critical, else sparse
};

struct Constants {
  DenseParams dense;
  CriticalParams critical;
  SparseParams sparse;
  MinDegreeParams mindeg;
  AutoThresholds autos;
};

// Overrides on top of the defaults; unknown keys throw InvalidInput.
Constants constants_from_json(const std::string& text);
Constants load_constants(const std::string& file);
std::string constants_to_json(const Constants& c);

}  // namespace sepaths
