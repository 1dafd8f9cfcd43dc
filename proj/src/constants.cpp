#include "sepaths/constants.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sepaths/errors.hpp"

namespace sepaths {

namespace {

using nlohmann::json;

template <class T>
void take(const json& obj, const char* key, T& field) {
  if (obj.contains(key)) field = obj.at(key).get<T>();
}

void only(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) throw InvalidInput("constants: " + where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw InvalidInput("constants: unknown key " + where + "." + it.key());
  }
}

void read_ham(const json& o, HamiltonBudget& h) {
  only(o, {"rotations_per_vertex", "restarts", "exact_cap", "stall_per_vertex", "max_boosters"}, "hamilton");
  take(o, "rotations_per_vertex", h.rotations_per_vertex);
  take(o, "restarts", h.restarts);
  take(o, "exact_cap", h.exact_cap);
  take(o, "stall_per_vertex", h.stall_per_vertex);
  take(o, "max_boosters", h.max_boosters);
}

json write_ham(const HamiltonBudget& h) {
  return {{"rotations_per_vertex", h.rotations_per_vertex}, {"restarts", h.restarts},
          {"exact_cap", h.exact_cap}, {"stall_per_vertex", h.stall_per_vertex},
          {"max_boosters", h.max_boosters}};
}

}  // namespace

Constants constants_from_json(const std::string& text) {
  Constants c;
  json j;
  try {
    j = json::parse(text);
    only(j, {"dense", "critical", "sparse", "mindeg", "reduction", "hamilton", "auto"}, "root");
    if (j.contains("hamilton")) {
      // A shared budget, refined per strategy below.
      HamiltonBudget h;
      read_ham(j["hamilton"], h);
      c.dense.ham = c.critical.ham = c.mindeg.ham = c.critical.reduction.ham = h;
      read_ham(j["hamilton"], c.sparse.ham);
    }
    if (j.contains("dense")) {
      const json& o = j["dense"];
      only(o, {"d", "t", "attempts_per_round", "resamples_per_vertex", "split_restarts", "hamilton"}, "dense");
      take(o, "d", c.dense.d);
      take(o, "t", c.dense.t);
      take(o, "attempts_per_round", c.dense.attempts_per_round);
      take(o, "resamples_per_vertex", c.dense.split.resamples_per_vertex);
      take(o, "split_restarts", c.dense.split.restarts);
      if (o.contains("hamilton")) read_ham(o["hamilton"], c.dense.ham);
    }
    if (j.contains("critical")) {
      const json& o = j["critical"];
      only(o, {"C", "C1", "cutoff", "strict", "leaf_pairing", "reduction_D", "fallback_restarts", "hamilton"}, "critical");
      take(o, "C", c.critical.C);
      take(o, "C1", c.critical.C1);
      take(o, "cutoff", c.critical.cutoff);
      take(o, "strict", c.critical.strict);
      take(o, "leaf_pairing", c.critical.leaf_pairing);
      take(o, "reduction_D", c.critical.reduction_D);
      take(o, "fallback_restarts", c.critical.fallback_restarts);
      if (o.contains("hamilton")) read_ham(o["hamilton"], c.critical.ham);
    }
    if (j.contains("reduction")) {
      const json& o = j["reduction"];
      only(o, {"sparsify_attempts", "sparsify_D", "expansion_samples", "uv_alternatives", "hamilton"}, "reduction");
      take(o, "sparsify_attempts", c.critical.reduction.sparsify_attempts);
      take(o, "sparsify_D", c.critical.reduction.sparsify_D);
      take(o, "expansion_samples", c.critical.reduction.expansion_samples);
      take(o, "uv_alternatives", c.critical.reduction.uv_alternatives);
      if (o.contains("hamilton")) read_ham(o["hamilton"], c.critical.reduction.ham);
    }
    if (j.contains("sparse")) {
      const json& o = j["sparse"];
      only(o, {"c_mark", "c_keep", "s_threshold", "density", "y_cap", "delta", "strict", "singleton_max", "split_on_failure", "hamilton"}, "sparse");
      take(o, "c_mark", c.sparse.c_mark);
      take(o, "c_keep", c.sparse.c_keep);
      take(o, "s_threshold", c.sparse.s_threshold);
      take(o, "density", c.sparse.density);
      take(o, "y_cap", c.sparse.y_cap);
      take(o, "delta", c.sparse.delta);
      take(o, "strict", c.sparse.strict);
      take(o, "singleton_max", c.sparse.singleton_max);
      take(o, "split_on_failure", c.sparse.split_on_failure);
      if (o.contains("hamilton")) read_ham(o["hamilton"], c.sparse.ham);
    }
    if (j.contains("mindeg")) {
      const json& o = j["mindeg"];
      only(o, {"override_threshold", "attempts", "hamilton"}, "mindeg");
      take(o, "override_threshold", c.mindeg.override_threshold);
      take(o, "attempts", c.mindeg.attempts);
      if (o.contains("hamilton")) read_ham(o["hamilton"], c.mindeg.ham);
    }
    if (j.contains("auto")) {
      const json& o = j["auto"];
      only(o, {"oracle_max_n", "dense_factor", "critical_factor"}, "auto");
      take(o, "oracle_max_n", c.autos.oracle_max_n);
      take(o, "dense_factor", c.autos.dense_factor);
      take(o, "critical_factor", c.autos.critical_factor);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("constants: ") + e.what());
  }
  return c;
}

Constants load_constants(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return constants_from_json(ss.str());
}

std::string constants_to_json(const Constants& c) {
  json j;
  j["dense"] = {{"d", c.dense.d}, {"t", c.dense.t}, {"attempts_per_round", c.dense.attempts_per_round},
                {"resamples_per_vertex", c.dense.split.resamples_per_vertex},
                {"split_restarts", c.dense.split.restarts}, {"hamilton", write_ham(c.dense.ham)}};
  j["critical"] = {{"C", c.critical.C}, {"C1", c.critical.C1}, {"cutoff", c.critical.cutoff},
                   {"strict", c.critical.strict}, {"leaf_pairing", c.critical.leaf_pairing},
                   {"reduction_D", c.critical.reduction_D},
                   {"fallback_restarts", c.critical.fallback_restarts}, {"hamilton", write_ham(c.critical.ham)}};
  j["reduction"] = {{"sparsify_attempts", c.critical.reduction.sparsify_attempts},
                    {"sparsify_D", c.critical.reduction.sparsify_D},
                    {"expansion_samples", c.critical.reduction.expansion_samples},
                    {"uv_alternatives", c.critical.reduction.uv_alternatives},
                    {"hamilton", write_ham(c.critical.reduction.ham)}};
  j["sparse"] = {{"c_mark", c.sparse.c_mark}, {"c_keep", c.sparse.c_keep},
                 {"s_threshold", c.sparse.s_threshold}, {"density", c.sparse.density},
                 {"y_cap", c.sparse.y_cap}, {"delta", c.sparse.delta}, {"strict", c.sparse.strict},
                 {"singleton_max", c.sparse.singleton_max}, {"split_on_failure", c.sparse.split_on_failure},
                 {"hamilton", write_ham(c.sparse.ham)}};
  j["mindeg"] = {{"override_threshold", c.mindeg.override_threshold}, {"attempts", c.mindeg.attempts},
                 {"hamilton", write_ham(c.mindeg.ham)}};
  j["auto"] = {{"oracle_max_n", c.autos.oracle_max_n}, {"dense_factor", c.autos.dense_factor},
               {"critical_factor", c.autos.critical_factor}};
  return j.dump(2);
}

}  // namespace sepaths
