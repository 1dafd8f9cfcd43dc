#include "sepaths/experiment.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "sepaths/errors.hpp"
#include "sepaths/randgen.hpp"

namespace sepaths {

EdgeRule EdgeRule::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("edge rule needs kind:value, got " + text);
  std::string kind = text.substr(0, colon);
  EdgeRule r;
  try {
    r.value = std::stod(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw InvalidInput("bad edge rule value in " + text);
  }
  if (kind == "ln") r.kind = Kind::LogFactor;
  else if (kind == "np") r.kind = Kind::MeanDegree;
  else if (kind == "p") r.kind = Kind::Probability;
  else if (kind == "d") r.kind = Kind::Degree;
  else throw InvalidInput("unknown edge rule kind " + kind);
  return r;
}

std::string EdgeRule::to_string() const {
  std::ostringstream s;
  switch (kind) {
    case Kind::LogFactor: s << "ln:"; break;
    case Kind::MeanDegree: s << "np:"; break;
    case Kind::Probability: s << "p:"; break;
    case Kind::Degree: s << "d:"; break;
  }
  s << value;
  return s.str();
}

double EdgeRule::probability(int n) const {
  switch (kind) {
    case Kind::LogFactor: return std::min(1.0, value * std::log(static_cast<double>(n)) / n);
    case Kind::MeanDegree: return std::min(1.0, value / n);
    case Kind::Probability: return value;
    case Kind::Degree: return n > 1 ? value / (n - 1) : 0;
  }
  return 0;
}

Graph experiment_instance(const ExperimentSpec& spec, int n, RngSeed seed) {
  if (spec.model == "gnp") return gnp(n, spec.rule.probability(n), seed);
  if (spec.model == "regular") {
    if (spec.rule.kind != EdgeRule::Kind::Degree) throw InvalidInput("regular model needs a d:k rule");
    return random_regular(n, static_cast<int>(spec.rule.value), seed);
  }
  throw InvalidInput("unknown model " + spec.model);
}

ExperimentReport run_experiment(const ExperimentSpec& spec, const Constants& c) {
  if (spec.trials < 1) throw InvalidInput("trials must be at least 1");
  if (spec.n_list.empty()) throw InvalidInput("empty n list");
  ExperimentReport rep;
  for (int n : spec.n_list)
    for (int t = 0; t < spec.trials; ++t) {
      TrialRow r;
      r.n = n;
      r.param = spec.rule.kind == EdgeRule::Kind::Degree ? spec.rule.value : spec.rule.probability(n);
      r.trial = t;
      r.seed = derive_seed(spec.seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)});
      r.strategy = strategy_name(spec.strategy);
      r.log_bound = lower_bound_log(n);
      rep.rows.push_back(r);
    }
  const int jobs = static_cast<int>(rep.rows.size());
  const int workers = spec.workers > 0 ? spec.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int k = 0; k < jobs; ++k) {
    TrialRow& r = rep.rows[k];
    auto start = std::chrono::steady_clock::now();
    nlohmann::json diag;
    try {
      Graph g = experiment_instance(spec, r.n, derive_seed(r.seed, {0}));
      r.leaf_bound = lower_bound_leaves(g);
      for (Vertex v : g.vertices()) {
        r.X0 += g.degree(v) == 0;
        r.X1 += g.degree(v) == 1;
      }
      auto out = run_strategy(g, spec.strategy, derive_seed(r.seed, {1}), c);
      r.success = true;
      r.system_size = static_cast<int>(out.system.size());
      r.strategy = strategy_name(out.used);
      diag = out.metrics;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    if (spec.timing)
      r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    diag["n"] = r.n;
    diag["trial"] = r.trial;
    diag["seed"] = r.seed;
    diag["success"] = r.success;
    if (!r.error.empty()) diag["error"] = r.error;
    r.diagnostics = diag.dump();
  }
  return rep;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentReport& rep) {
  out << "kind,n,param,strategy,trial,seed,success,system_size,log_bound,leaf_bound,X0,X1,wall_ms,error\n";
  auto num = [](double x) {
    std::ostringstream s;
    s << std::setprecision(10) << x;
    return s.str();
  };
  for (const auto& r : rep.rows)
    out << "trial," << r.n << ',' << num(r.param) << ',' << r.strategy << ',' << r.trial << ',' << r.seed << ','
        << (r.success ? 1 : 0) << ',' << r.system_size << ',' << r.log_bound << ',' << r.leaf_bound << ','
        << r.X0 << ',' << r.X1 << ',' << r.wall_ms << ',' << csv_field(r.error) << '\n';
  std::map<int, std::vector<const TrialRow*>> by_n;
  for (const auto& r : rep.rows) by_n[r.n].push_back(&r);
  for (const auto& [n, rows] : by_n) {
    double ok = 0, size = 0, x0 = 0, x1 = 0, leaf = 0, ms = 0;
    for (const TrialRow* r : rows) {
      x0 += r->X0;
      x1 += r->X1;
      leaf += r->leaf_bound;
      ms += static_cast<double>(r->wall_ms);
      if (r->success) {
        ok += 1;
        size += r->system_size;
      }
    }
    const double k = static_cast<double>(rows.size());
    out << "summary," << n << ',' << num(rows.front()->param) << ',' << rows.front()->strategy << ','
        << rows.size() << ",," << num(ok / k) << ',' << num(ok > 0 ? size / ok : 0) << ','
        << rows.front()->log_bound << ',' << num(leaf / k) << ',' << num(x0 / k) << ',' << num(x1 / k) << ','
        << num(ms / k) << ",\n";
  }
}

void write_jsonl(std::ostream& out, const ExperimentReport& rep) {
  for (const auto& r : rep.rows) out << r.diagnostics << '\n';
}

}  // namespace sepaths
