#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepaths/constants.hpp"
#include "sepaths/errors.hpp"
#include "sepaths/experiment.hpp"
#include "sepaths/extremal.hpp"
#include "sepaths/faultmon.hpp"
#include "sepaths/hamilton.hpp"
#include "sepaths/path_system.hpp"
#include "sepaths/randgen.hpp"
#include "sepaths/strategy.hpp"

namespace sepaths::cli {
namespace {

struct Options {
  std::uint64_t seed = 1;
  std::string constants;
  std::string format = "edgelist";
  long long budget_ms = 0;

  // gen
  std::string model = "gnp";
  int n = 0;
  double p = -1;
  int d = -1;
  std::string rule;
  std::string output;

  // separate / verify / bounds / oracle / ham / monitor
  std::string graph;
  std::string system;
  std::string strategy = "auto";
  std::string metrics;
  std::string mode = "cycle";
  std::string failed;
  std::string syndrome;

  // gadget
  std::string graph_out;
  std::string system_out;

  // experiment
  std::vector<int> n_list;
  int trials = 1;
  std::string csv;
  std::string jsonl;
  bool timing = false;
  int workers = 0;
};

Constants constants_of(const Options& o) {
  return o.constants.empty() ? Constants{} : load_constants(o.constants);
}

// Writes to the named file, or to `out` when the name is empty or "-".
template <class F>
void emit(const std::string& file, std::ostream& out, F&& write) {
  if (file.empty() || file == "-") {
    write(out);
    return;
  }
  std::ofstream f(file);
  if (!f) throw InvalidInput("cannot write " + file);
  write(f);
  if (!f) throw InvalidInput("write failed: " + file);
}

// Runs `work` on a worker thread; past the budget the process ends with code 3.
template <class T>
T within_budget(long long budget_ms, std::ostream& err, std::function<T()> work) {
  if (budget_ms <= 0) return work();
  auto task = std::make_shared<std::packaged_task<T()>>(std::move(work));
  auto fut = task->get_future();
  std::thread([task] { (*task)(); }).detach();
  if (fut.wait_for(std::chrono::milliseconds(budget_ms)) == std::future_status::timeout) {
    err << "error: budget of " << budget_ms << " ms exhausted\n";
    err.flush();
    std::cout.flush();
    std::quick_exit(3);
  }
  return fut.get();
}

int cmd_gen(const Options& o, std::ostream& out) {
  Graph g;
  if (o.model == "gnp") {
    double p = o.p;
    if (!o.rule.empty()) p = EdgeRule::parse(o.rule).probability(o.n);
    if (p < 0 || p > 1) throw InvalidInput("gnp needs --p in [0,1] or --rule");
    g = gnp(o.n, p, o.seed);
  } else if (o.model == "regular") {
    if (o.d < 0) throw InvalidInput("regular needs --d");
    g = random_regular(o.n, o.d, o.seed);
  } else {
    throw InvalidInput("unknown model " + o.model);
  }
  emit(o.output, out, [&](std::ostream& s) { write_edge_list(s, g); });
  return 0;
}

int cmd_separate(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = load_edge_list(o.graph);
  Constants c = constants_of(o);
  Strategy s = parse_strategy(o.strategy);
  auto res = within_budget<StrategyOutcome>(o.budget_ms, err, [&] { return run_strategy(g, s, o.seed, c); });
  if (!verify_separation(g, res.system).separates) throw std::logic_error("refusing to write a non-separating system");
  emit(o.output, out, [&](std::ostream& f) { write_path_system(f, res.system); });
  res.metrics["size"] = res.system.size();
  res.metrics["seed"] = o.seed;
  if (!o.metrics.empty()) {
    std::ofstream m(o.metrics, std::ios::app);
    m << res.metrics.dump() << '\n';
  }
  err << "strategy " << strategy_name(res.used) << ", " << res.system.size() << " paths\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Graph g = load_edge_list(o.graph);
  PathSystem sys = load_path_system(o.system);
  validate_paths(g, sys);
  auto rep = verify_separation(g, sys);
  out << "separating: " << (rep.separates ? "true" : "false");
  if (rep.witness) out << " (" << rep.witness->first << " and " << rep.witness->second << " share a code)";
  out << '\n';
  return rep.separates ? 0 : 1;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  Graph g = load_edge_list(o.graph);
  out << "log-bound " << lower_bound_log(g.order()) << '\n';
  out << "leaf-bound " << lower_bound_leaves(g) << '\n';
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  Graph g = load_edge_list(o.graph);
  auto res = exact_sp(g);
  out << "sp " << res.size << '\n';
  if (!o.output.empty()) save_path_system(o.output, res.witness);
  return 0;
}

int cmd_gadget(const Options& o, std::ostream& out) {
  Gadget gad = build_gadget(o.n);
  if (!o.graph_out.empty()) save_edge_list(o.graph_out, gad.g_e);
  if (!o.system_out.empty()) save_path_system(o.system_out, gad.fe);
  out << "n " << gad.n << '\n'
      << "edges " << gad.g.edge_count() << '\n'
      << "added-edge " << gad.e.u << ' ' << gad.e.v << '\n'
      << "system-size " << gad.fe.size() << '\n'
      << "lower-bound-without-edge " << gadget_lower_bound(gad) << '\n';
  return 0;
}

int cmd_monitor(const std::string& action, const Options& o, std::ostream& out) {
  Graph g = load_edge_list(o.graph);
  PathSystem sys = load_path_system(o.system);
  CodeTable table = build_code_table(g, sys);
  if (action == "build") {
    emit(o.output, out, [&](std::ostream& f) {
      for (Vertex v : g.vertices()) f << v << ' ' << table.codes[v].to_string() << '\n';
    });
    return 0;
  }
  if (action == "simulate") {
    std::optional<Vertex> failed;
    if (!o.failed.empty() && o.failed != "none") {
      try {
        failed = static_cast<Vertex>(std::stol(o.failed));
      } catch (const std::exception&) {
        throw InvalidInput("bad --failed value " + o.failed);
      }
      g.require(*failed);
    }
    out << simulate_probe(g, sys, failed).to_string() << '\n';
    return 0;
  }
  auto res = decode(table, Bitstring::parse(o.syndrome));
  switch (res.kind) {
    case DecodeKind::Vertex:
      out << "vertex " << res.vertex << '\n';
      return 0;
    case DecodeKind::NoFailure:
      out << "no-failure";
      if (res.uncovered) out << " (or vertex " << *res.uncovered << ")";
      out << '\n';
      return 0;
    case DecodeKind::Ambiguous:
      out << "ambiguous\n";
      return 1;
  }
  return 1;
}

int cmd_ham(const Options& o, std::ostream& out) {
  Graph g = load_edge_list(o.graph);
  HamiltonResult r;
  if (o.mode == "cycle") r = hamilton_cycle(g, o.seed);
  else if (o.mode == "path") r = hamilton_path(g, o.seed);
  else throw InvalidInput("--mode is cycle or path");
  const char* status = r.status == HamiltonStatus::Found ? "found"
                       : r.status == HamiltonStatus::Impossible ? "impossible" : "exhausted";
  out << "status " << status << '\n'
      << "order " << g.order() << '\n'
      << "longest " << r.longest.size() << '\n'
      << "restarts " << r.restarts << '\n'
      << "rotations " << r.rotations << '\n';
  if (!r.reason.empty()) out << "reason " << r.reason << '\n';
  if (r.found()) {
    out << "path";
    for (Vertex v : r.path) out << ' ' << v;
    out << '\n';
  }
  return r.found() ? 0 : 1;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  ExperimentSpec spec;
  spec.model = o.model;
  spec.n_list = o.n_list;
  spec.rule = EdgeRule::parse(o.rule.empty() ? (o.model == "regular" ? "d:3" : "ln:3") : o.rule);
  spec.strategy = parse_strategy(o.strategy);
  spec.trials = o.trials;
  spec.seed = o.seed;
  spec.timing = o.timing;
  spec.workers = o.workers;
  auto rep = run_experiment(spec, constants_of(o));
  emit(o.csv, out, [&](std::ostream& f) { write_csv(f, rep); });
  if (!o.jsonl.empty()) emit(o.jsonl, out, [&](std::ostream& f) { write_jsonl(f, rep); });
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Separating path systems: construction, verification, bounds and fault localisation"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--constants", o.constants, "JSON file overriding tuning constants")->check(CLI::ExistingFile);
  app.add_option("--format", o.format, "Graph file format")->check(CLI::IsMember({"edgelist"}));
  app.add_option("--budget-ms", o.budget_ms, "Wall-clock budget for separate (0: none)");

  auto* gen = app.add_subcommand("gen", "Generate a random graph");
  gen->add_option("--model", o.model)->check(CLI::IsMember({"gnp", "regular"}));
  gen->add_option("--n", o.n, "Vertex count")->required();
  gen->add_option("--p", o.p, "Edge probability");
  gen->add_option("--rule", o.rule, "Edge rule ln:c, np:c or p:x");
  gen->add_option("--d", o.d, "Degree for the regular model");
  gen->add_option("-o,--output", o.output);

  auto* sep = app.add_subcommand("separate", "Construct a verified separating path system");
  sep->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  sep->add_option("--strategy", o.strategy)
      ->check(CLI::IsMember({"dense", "critical", "sparse", "regular", "mindeg", "auto", "oracle"}))
      ->capture_default_str();
  sep->add_option("-o,--output", o.output);
  sep->add_option("--metrics", o.metrics, "Append a JSON line of run metrics");

  auto* ver = app.add_subcommand("verify", "Check that a path system separates a graph");
  ver->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  ver->add_option("system", o.system)->required()->check(CLI::ExistingFile);

  auto* bnd = app.add_subcommand("bounds", "Print the two lower bounds");
  bnd->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);

  auto* orc = app.add_subcommand("oracle", "Exact minimum by exhaustive search (small graphs)");
  orc->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  orc->add_option("-o,--output", o.output, "Write an optimal system");

  auto* gad = app.add_subcommand("gadget", "Build the extremal gadget");
  gad->add_option("--n", o.n)->required();
  gad->add_option("--graph-out", o.graph_out, "Graph with the added edge");
  gad->add_option("--system-out", o.system_out);

  auto* mon = app.add_subcommand("monitor", "Single-node fault localisation");
  mon->require_subcommand(1);
  std::string mon_action;
  for (const char* name : {"build", "simulate", "decode"}) {
    auto* sub = mon->add_subcommand(name);
    sub->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
    sub->add_option("system", o.system)->required()->check(CLI::ExistingFile);
    if (std::string(name) == "build") sub->add_option("-o,--output", o.output);
    if (std::string(name) == "simulate") sub->add_option("--failed", o.failed, "Vertex id or none");
    if (std::string(name) == "decode") sub->add_option("syndrome", o.syndrome)->required();
    sub->callback([&mon_action, name] { mon_action = name; });
  }

  auto* ham = app.add_subcommand("ham", "Hamilton search diagnostics");
  ham->add_option("graph", o.graph)->required()->check(CLI::ExistingFile);
  ham->add_option("--mode", o.mode)->check(CLI::IsMember({"cycle", "path"}));

  auto* exp = app.add_subcommand("experiment", "Monte-Carlo sweep to CSV");
  exp->add_option("--model", o.model)->check(CLI::IsMember({"gnp", "regular"}));
  exp->add_option("--n", o.n_list, "Vertex counts")->required();
  exp->add_option("--rule", o.rule, "ln:c, np:c, p:x or d:k");
  exp->add_option("--strategy", o.strategy)
      ->check(CLI::IsMember({"dense", "critical", "sparse", "regular", "mindeg", "auto", "oracle"}));
  exp->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  exp->add_option("--csv", o.csv);
  exp->add_option("--jsonl", o.jsonl);
  exp->add_flag("--timing", o.timing, "Record wall-clock times");
  exp->add_option("--workers", o.workers);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*sep) return cmd_separate(o, out, err);
    if (*ver) return cmd_verify(o, out);
    if (*bnd) return cmd_bounds(o, out);
    if (*orc) return cmd_oracle(o, out);
    if (*gad) return cmd_gadget(o, out);
    if (*mon) return cmd_monitor(mon_action, o, out);
    if (*ham) return cmd_ham(o, out);
    if (*exp) return cmd_experiment(o, out);
  } catch (const PreconditionViolation& e) {
    err << "error: precondition " << e.property() << ": " << e.what() << '\n';
    return 2;
  } catch (const StrategyFailure& e) {
    err << "error: strategy failed at " << e.stage() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace sepaths::cli
