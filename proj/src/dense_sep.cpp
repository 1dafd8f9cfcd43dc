#include "sepaths/dense_sep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sepaths/errors.hpp"

namespace sepaths {

VertexSet halving_split(const Graph& g, const CliquePartition& part, double d, double t,
                        RngSeed seed, const SplitBudget& budget) {
  if (!(t >= 0 && d >= 2 * t)) throw InvalidInput("halving_split needs d >= 2t >= 0");
  const int n = g.order();
  const int N = g.id_space();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Vertex> leftovers;
  std::vector<char> covered(N, 0);
  for (const auto& c : part.classes) {
    std::size_t i = 0;
    for (; i + 1 < c.size(); i += 2) pairs.push_back({c[i], c[i + 1]});
    if (i < c.size()) leftovers.push_back(c[i]);
    for (Vertex v : c) {
      g.require(v);
      if (covered[v]) throw InvalidInput("partition classes overlap");
      covered[v] = 1;
    }
  }
  for (Vertex v : g.vertices())
    if (!covered[v]) throw InvalidInput("partition does not cover the graph");
  std::size_t i = 0;
  for (; i + 1 < leftovers.size(); i += 2) pairs.push_back({leftovers[i], leftovers[i + 1]});
  const Vertex single = i < leftovers.size() ? leftovers[i] : -1;
  const int s_size = (n + 1) / 2;

  std::vector<int> pair_of(N, -1);
  for (std::size_t p = 0; p < pairs.size(); ++p) pair_of[pairs[p].first] = pair_of[pairs[p].second] = static_cast<int>(p);
  const double base_need = d / 2 - t;
  Rng rng(seed);
  std::vector<char> in(N, 0), choice(pairs.size(), 0), flagged(N, 0);
  std::vector<int> cnt(N, 0);
  std::vector<Vertex> violated;

  auto need = [&](Vertex v) {
    double r = base_need;
    if (in[v] && s_size >= 3) r = std::max(r, 2.0);
    return r;
  };
  auto touch = [&](Vertex v) {
    if (!flagged[v] && cnt[v] < need(v)) {
      flagged[v] = 1;
      violated.push_back(v);
    }
  };
  auto place = [&](Vertex v, bool on) {
    if (in[v] == on) return;
    in[v] = on;
    int delta = on ? 1 : -1;
    for (Vertex w : g.neighbors(v)) cnt[w] += delta;
  };
  auto set_pair = [&](std::size_t p, bool c) {
    choice[p] = c;
    place(c ? pairs[p].second : pairs[p].first, false);
    place(c ? pairs[p].first : pairs[p].second, true);
    for (Vertex x : {pairs[p].first, pairs[p].second}) {
      touch(x);
      for (Vertex w : g.neighbors(x)) touch(w);
    }
  };

  const long long steps = static_cast<long long>(budget.resamples_per_vertex) * std::max(n, 1);
  for (int restart = 0; restart < budget.restarts; ++restart) {
    std::fill(in.begin(), in.end(), 0);
    std::fill(cnt.begin(), cnt.end(), 0);
    std::fill(flagged.begin(), flagged.end(), 0);
    violated.clear();
    if (single >= 0) place(single, true);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      choice[p] = rng.coin();
      place(choice[p] ? pairs[p].first : pairs[p].second, true);
    }
    for (Vertex v : g.vertices()) touch(v);
    for (long long step = 0; step <= steps; ++step) {
      // Drop entries that are no longer violated.
      while (!violated.empty()) {
        std::size_t k = rng.below(violated.size());
        Vertex v = violated[k];
        if (cnt[v] >= need(v)) {
          flagged[v] = 0;
          violated[k] = violated.back();
          violated.pop_back();
          continue;
        }
        break;
      }
      if (violated.empty()) {
        VertexSet S;
        for (Vertex v : g.vertices())
          if (in[v]) S.push_back(v);
        if (static_cast<int>(S.size()) != s_size) throw std::logic_error("halving_split: size drift");
        return S;
      }
      if (step == steps) break;
      Vertex v = violated[rng.below(violated.size())];
      // Resample every pair the event at v depends on.
      std::vector<int> touched;
      if (pair_of[v] >= 0) touched.push_back(pair_of[v]);
      for (Vertex w : g.neighbors(v))
        if (pair_of[w] >= 0) touched.push_back(pair_of[w]);
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int p : touched) set_pair(p, rng.coin());
    }
  }
  throw BudgetExhausted("halving_split: resampling budget exhausted");
}

DenseResult separate_dense(const Graph& g, RngSeed seed, const DenseParams& params) {
  const int n = g.order();
  if (n < 1) throw InvalidInput("separate_dense needs a nonempty graph");
  DenseResult res;
  res.d = params.d < 0 ? g.min_degree() : params.d;
  res.t = params.t < 0 ? res.d / 4 : params.t;
  const int ell = lower_bound_log(n);
  CliquePartition part{{g.vertices()}};
  for (int round = 0; round < ell; ++round) {
    bool ok = false;
    DenseRound info;
    std::string last;
    for (int attempt = 0; attempt < params.attempts_per_round && !ok; ++attempt) {
      info.attempts = attempt + 1;
      VertexSet S;
      try {
        S = halving_split(g, part, res.d, res.t, derive_seed(seed, {static_cast<std::uint64_t>(round), static_cast<std::uint64_t>(attempt), 0}), params.split);
      } catch (const BudgetExhausted& e) {
        last = e.what();
        continue;
      }
      info.size = static_cast<int>(S.size());
      if (S.size() == 1) {
        res.system.add(S);
        ok = true;
      } else if (S.size() == 2) {
        if (g.adjacent(S[0], S[1])) {
          res.system.add(S);
          ok = true;
        } else {
          last = "two-vertex set is not an edge";
        }
      } else {
        auto h = hamilton_cycle(induced(g, S), derive_seed(seed, {static_cast<std::uint64_t>(round), static_cast<std::uint64_t>(attempt), 1}), params.ham);
        if (h.found()) {
          res.system.add(h.path, true);
          info.closed = true;
          ok = true;
        } else {
          last = "no Hamilton cycle in G[S] (|S| = " + std::to_string(S.size()) + "): " + h.reason;
        }
      }
      if (ok) {
        std::vector<char> inS(g.id_space(), 0);
        for (Vertex v : S) inS[v] = 1;
        CliquePartition next;
        for (const auto& c : part.classes) {
          VertexSet a, b;
          for (Vertex v : c) (inS[v] ? a : b).push_back(v);
          if (!a.empty()) next.classes.push_back(std::move(a));
          if (!b.empty()) next.classes.push_back(std::move(b));
        }
        part = std::move(next);
      }
    }
    if (!ok) throw StrategyFailure("round " + std::to_string(round + 1), last);
    if (!info.closed) ++res.short_sets;
    res.rounds.push_back(info);
  }
  if (static_cast<int>(part.classes.size()) != n)
    throw std::logic_error("separate_dense: classes not refined to singletons");
  if (!verify_separation(g, res.system).separates)
    throw std::logic_error("separate_dense: output does not separate");
  return res;
}

}  // namespace sepaths
