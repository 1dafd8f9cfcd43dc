#include "sepaths/strategy.hpp"

#include <cmath>
#include <stdexcept>

#include "sepaths/errors.hpp"

namespace sepaths {

Strategy parse_strategy(const std::string& name) {
  if (name == "dense") return Strategy::Dense;
  if (name == "critical") return Strategy::Critical;
  if (name == "sparse") return Strategy::Sparse;
  if (name == "regular") return Strategy::Regular;
  if (name == "mindeg") return Strategy::MinDegree;
  if (name == "auto") return Strategy::Auto;
  if (name == "oracle") return Strategy::Oracle;
  throw InvalidInput("unknown strategy " + name);
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Dense: return "dense";
    case Strategy::Critical: return "critical";
    case Strategy::Sparse: return "sparse";
    case Strategy::Regular: return "regular";
    case Strategy::MinDegree: return "mindeg";
    case Strategy::Auto: return "auto";
    case Strategy::Oracle: return "oracle";
  }
  return "?";
}

Strategy choose_strategy(const Graph& g, const AutoThresholds& t) {
  const int n = g.order();
  if (n <= t.oracle_max_n) return Strategy::Oracle;
  if (g.min_degree() >= min_degree_threshold(n)) return Strategy::MinDegree;
  const double np = 2.0 * static_cast<double>(g.edge_count()) / n;
  const double ln = std::log(static_cast<double>(n));
  if (np >= t.dense_factor * ln) return Strategy::Dense;
  if (np >= t.critical_factor * ln) return Strategy::Critical;
  return Strategy::Sparse;
}

namespace {

nlohmann::json critical_json(const CriticalMetrics& m) {
  return {{"ell", m.ell}, {"X0", m.X0}, {"X1", m.X1}, {"giant_leaves", m.giant_leaves},
          {"outside_leaves", m.outside_leaves}, {"leaf_paths", m.leaf_paths},
          {"core_cycles", m.core_cycles}, {"core_paths", m.core_paths},
          {"core_fallbacks", m.core_fallbacks}, {"uncovered", m.uncovered},
          {"empty_cores", m.empty_cores}, {"C1_used", m.C1_used}, {"shortfalls", m.shortfalls},
          {"override_constants", m.override_constants}, {"rule_mismatch_rate", m.rule_mismatch_rate},
          {"domination_ok", m.domination_ok}, {"high_degree_distinct", m.high_degree_distinct},
          {"eligible_leaves", m.eligible_leaves}, {"matching_size", m.matching_size},
          {"upgraded", m.upgraded}, {"savings", m.savings}, {"reverted", m.reverted},
          {"extended", m.extended}, {"repairs", m.repairs}, {"bound", m.bound}};
}

nlohmann::json sparse_json(const SparseMetrics& m) {
  return {{"np", m.np}, {"c_mark", m.c_mark}, {"c_keep", m.c_keep}, {"s_threshold", m.s_threshold},
          {"density", m.density}, {"y_cap", m.y_cap}, {"gprime_edges", m.gprime_edges},
          {"S", m.S}, {"B0", m.B0}, {"B1", m.B1}, {"B2", m.B2}, {"H", m.H}, {"guard", m.guard},
          {"X0", m.X0}, {"X1", m.X1}, {"giant_leaves", m.giant_leaves},
          {"outside_leaves", m.outside_leaves}, {"F0", m.F0}, {"F1", m.F1}, {"FS", m.FS},
          {"FU", m.FU}, {"colors", m.colors}, {"classes", m.classes}, {"class_cap", m.class_cap},
          {"splits", m.splits}, {"fallbacks", m.fallbacks}, {"missed", m.missed}, {"repairs", m.repairs}, {"trivial_members", m.trivial_members},
          {"ham_searches", m.ham_searches}, {"ham_failures", m.ham_failures},
          {"ham_impossible", m.ham_impossible},
          {"lower_bound_leaves", m.lower_bound_leaves}, {"total", m.total},
          {"paper_total", m.paper_total}};
}

int count_degree(const Graph& g, int d) {
  int c = 0;
  for (Vertex v : g.vertices()) c += g.degree(v) == d;
  return c;
}

}  // namespace

StrategyOutcome run_strategy(const Graph& g, Strategy s, RngSeed seed, const Constants& c) {
  StrategyOutcome out;
  if (s == Strategy::Auto) {
    Strategy pick = choose_strategy(g, c.autos);
    if (pick == Strategy::Sparse) {
      try {
        out = run_strategy(g, pick, seed, c);
      } catch (const StrategyFailure& e) {
        if (e.stage() != "C3") throw;
        out = run_strategy(g, g.order() <= c.autos.oracle_max_n ? Strategy::Oracle : Strategy::Critical, seed, c);
        out.metrics["fallback_from"] = "sparse";
      }
    } else {
      out = run_strategy(g, pick, seed, c);
    }
    out.metrics["auto"] = true;
    return out;
  }
  out.used = s;
  switch (s) {
    case Strategy::Dense:
    case Strategy::Regular: {
      auto r = separate_dense(g, seed, c.dense);
      out.system = std::move(r.system);
      out.metrics = {{"d", r.d}, {"t", r.t}, {"rounds", r.rounds.size()}, {"short_sets", r.short_sets}};
      break;
    }
    case Strategy::Critical: {
      auto r = separate_critical(g, seed, c.critical);
      out.system = std::move(r.system);
      out.metrics = critical_json(r.metrics);
      break;
    }
    case Strategy::Sparse: {
      auto r = separate_sparse(g, seed, c.sparse);
      out.system = std::move(r.system);
      out.metrics = sparse_json(r.metrics);
      break;
    }
    case Strategy::MinDegree: {
      auto r = separate_min_degree(g, seed, c.mindeg);
      out.system = std::move(r.system);
      out.metrics = {{"attempts", r.attempts}, {"posa_passes", r.posa_passes},
                     {"short_sets", r.short_sets}, {"threshold_met", r.threshold_met}};
      break;
    }
    case Strategy::Oracle: {
      auto r = exact_sp(g);
      out.system = std::move(r.witness);
      out.metrics = {{"exact", r.size}, {"nodes", r.nodes}};
      break;
    }
    case Strategy::Auto: break;
  }
  if (!out.metrics.contains("X0")) out.metrics["X0"] = count_degree(g, 0);
  if (!out.metrics.contains("X1")) out.metrics["X1"] = count_degree(g, 1);
  out.metrics["strategy"] = strategy_name(out.used);
  if (!verify_separation(g, out.system).separates)
    throw std::logic_error("strategy " + strategy_name(out.used) + " produced a non-separating system");
  return out;
}

}  // namespace sepaths
