#pragma once

#include <string>

#include <json.hpp>

#include "sepaths/constants.hpp"
#include "sepaths/graph.hpp"
#include "sepaths/path_system.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

enum class Strategy { Dense, Critical, Sparse, Regular, MinDegree, Auto, Oracle };

Strategy parse_strategy(const std::string& name);
std::string strategy_name(Strategy s);

// Strategy `auto` resolves to: oracle for tiny graphs, mindeg above its
// threshold, then dense / critical / sparse by np against ln n.
Strategy choose_strategy(const Graph& g, const AutoThresholds& t);

struct StrategyOutcome {
  PathSystem system;
  Strategy used = Strategy::Auto;
  nlohmann::json metrics;
};

// The returned system is verified; failures propagate as exceptions.
StrategyOutcome run_strategy(const Graph& g, Strategy s, RngSeed seed, const Constants& c = {});

}  // namespace sepaths
