#include "sepaths/reduced_core.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#include "sepaths/errors.hpp"
#include "sepaths/properties.hpp"

namespace sepaths {

namespace {

std::atomic<std::uint64_t> g_lifts{0}, g_lift_failures{0}, g_builds{0}, g_replay_failures{0};

using AdjSets = std::vector<std::set<Vertex>>;

Graph to_graph(const AdjSets& adj, const std::vector<char>& alive, int id_space) {
  std::vector<std::vector<Vertex>> out(id_space);
  VertexSet present;
  for (int v = 0; v < static_cast<int>(adj.size()) && v < id_space; ++v) {
    if (!alive[v]) continue;
    present.push_back(v);
    out[v].assign(adj[v].begin(), adj[v].end());
  }
  return Graph::from_adjacency(id_space, present, std::move(out));
}

void cut_vertex(AdjSets& adj, Vertex v, std::vector<Edge>* removed) {
  for (Vertex w : adj[v]) {
    adj[w].erase(v);
    if (removed) removed->push_back({std::min(v, w), std::max(v, w)});
  }
  adj[v].clear();
}

void link(AdjSets& adj, Vertex a, Vertex b) {
  adj[a].insert(b);
  adj[b].insert(a);
}

}  // namespace

LiftCounters lift_counters() {
  return {g_lifts.load(), g_lift_failures.load(), g_builds.load(), g_replay_failures.load()};
}

void reset_lift_counters() {
  g_lifts = 0;
  g_lift_failures = 0;
  g_builds = 0;
  g_replay_failures = 0;
}

ReducedCore build_reduced_core(const Graph& h, double D, Vertex x1, Vertex x2,
                               const ReductionOptions& opt) {
  h.require(x1);
  h.require(x2);
  if (x1 == x2) throw InvalidInput("x1 and x2 must differ");
  if (h.min_degree() < 2) throw PreconditionViolation("2-core", "minimum degree below 2");
  const int dist = distance(h, x1, x2);
  if (dist < opt.min_endpoint_distance)
    throw PreconditionViolation("C4", "dist(x1, x2) = " + std::to_string(dist));
  for (Vertex x : {x1, x2})
    if (!is_D_far(h, x, D)) throw PreconditionViolation("C5", "vertex " + std::to_string(x) + " is not D-far");
  if (auto c1 = check_C1(h, D, opt.span); !c1.passed) throw PreconditionViolation("C1", c1.detail);
  if (auto c2 = check_C2(h, D, opt.span); !c2.passed) throw PreconditionViolation("C2", c2.detail);

  auto pick_neighbor = [&](Vertex x, const std::optional<Vertex>& forced) {
    if (forced) {
      if (!h.adjacent(x, *forced))
        throw PreconditionViolation("u-choice", std::to_string(*forced) + " is not a neighbour of " + std::to_string(x));
      return *forced;
    }
    return h.neighbors(x).front();
  };
  const Vertex u1 = pick_neighbor(x1, opt.u1);
  const Vertex u2 = pick_neighbor(x2, opt.u2);

  const int base = h.id_space();
  const VertexSet S = low_degree_set(h, D);
  AdjSets adj(base);
  std::vector<char> alive(base, 0);
  for (Vertex v : h.vertices()) {
    alive[v] = 1;
    auto nb = h.neighbors(v);
    adj[v].insert(nb.begin(), nb.end());
  }
  auto fresh = [&] {
    adj.emplace_back();
    alive.push_back(1);
    return static_cast<Vertex>(adj.size() - 1);
  };

  ReducedCore rc;
  rc.host = h;
  rc.x1 = x1;
  rc.x2 = x2;
  rc.D = D;
  {
    ReplacementRecord rec;
    rec.kind = ReplacementRecord::Kind::Endpoints;
    rec.path = {x1, x2};
    rec.a = u1;
    rec.b = u2;
    cut_vertex(adj, x1, &rec.removed_edges);
    cut_vertex(adj, x2, &rec.removed_edges);
    alive[x1] = alive[x2] = 0;
    rec.new_vertex = fresh();
    link(adj, rec.new_vertex, u1);
    link(adj, rec.new_vertex, u2);
    rc.log.push_back(std::move(rec));
  }

  std::vector<char> in_s(base, 0);
  for (Vertex v : S) in_s[v] = 1;
  for (;;) {
    VertexSet live_orig, live_s;
    for (Vertex v : h.vertices())
      if (alive[v]) {
        live_orig.push_back(v);
        if (in_s[v]) live_s.push_back(v);
      }
    if (live_s.size() < 2) break;
    Graph sub = induced(h, live_orig);
    VertexPath best;
    for (Vertex u : live_s) {
      auto d = bfs_distances(sub, u, 4);
      for (Vertex v : live_s) {
        if (v <= u || d[v] == kInfiniteDistance) continue;
        VertexPath p = shortest_path(sub, u, v);
        if (best.empty() || p.size() < best.size() || (p.size() == best.size() && p < best)) best = std::move(p);
      }
    }
    if (best.empty()) break;
    std::vector<char> on_path(adj.size(), 0);
    for (Vertex w : best) on_path[w] = 1;
    const Vertex u = best.front(), v = best.back();
    std::optional<std::pair<Vertex, Vertex>> choice;
    for (Vertex a : adj[u]) {
      if (on_path[a]) continue;
      for (Vertex b : adj[v])
        if (!on_path[b] && b != a) {
          choice = {a, b};
          break;
        }
      if (choice) break;
    }
    if (!choice)
      throw PreconditionViolation("u-choice", "no distinct outside neighbours for the S-path from " +
                                                  std::to_string(u) + " to " + std::to_string(v));
    ReplacementRecord rec;
    rec.kind = ReplacementRecord::Kind::Contraction;
    rec.path = best;
    rec.a = choice->first;
    rec.b = choice->second;
    std::set<Edge> removed;
    for (Vertex w : best) {
      std::vector<Edge> tmp;
      cut_vertex(adj, w, &tmp);
      removed.insert(tmp.begin(), tmp.end());
      alive[w] = 0;
    }
    rec.removed_edges.assign(removed.begin(), removed.end());
    rec.new_vertex = fresh();
    link(adj, rec.new_vertex, rec.a);
    link(adj, rec.new_vertex, rec.b);
    rc.log.push_back(std::move(rec));
  }

  const int id_space = static_cast<int>(adj.size());
  rc.hstar = to_graph(adj, alive, id_space);
  for (const auto& rec : rc.log) {
    rc.t_star.push_back(rec.new_vertex);
    if (rc.hstar.degree(rec.new_vertex) != 2)
      throw PreconditionViolation("T-degree", "new vertex " + std::to_string(rec.new_vertex) +
                                                  " has degree " + std::to_string(rc.hstar.degree(rec.new_vertex)));
  }
  for (Vertex v : rc.hstar.vertices()) {
    if (v >= base) continue;
    (in_s[v] ? rc.s_star : rc.u_star).push_back(v);
  }
  const long long kept = static_cast<long long>(rc.s_star.size() + rc.u_star.size());
  if (kept < static_cast<long long>(h.order()) - 2 - 3 * static_cast<long long>(S.size()))
    throw PreconditionViolation("count", "|S* u U*| = " + std::to_string(kept));
  ++g_builds;
  if (!(replay_log(rc) == h)) {
    ++g_replay_failures;
    throw std::logic_error("reduced core: log replay does not reconstruct the host");
  }
  return rc;
}

Graph replay_log(const ReducedCore& rc) {
  const int id_space = rc.hstar.id_space();
  AdjSets adj(id_space);
  std::vector<char> alive(id_space, 0);
  for (Vertex v : rc.hstar.vertices()) {
    alive[v] = 1;
    auto nb = rc.hstar.neighbors(v);
    adj[v].insert(nb.begin(), nb.end());
  }
  for (auto it = rc.log.rbegin(); it != rc.log.rend(); ++it) {
    cut_vertex(adj, it->new_vertex, nullptr);
    alive[it->new_vertex] = 0;
    for (Vertex w : it->path) alive[w] = 1;
    for (const Edge& e : it->removed_edges) link(adj, e.u, e.v);
  }
  return to_graph(adj, alive, rc.host.id_space());
}

VertexPath lift_cycle(const ReducedCore& rc, const VertexPath& cycle) {
  if (!is_hamilton_cycle(rc.hstar, cycle)) throw InvalidInput("lift_cycle: not a Hamilton cycle of H*");
  VertexPath cur = cycle;
  auto fail = [&](const std::string& why) -> VertexPath {
    ++g_lift_failures;
    throw std::logic_error("lift_cycle: " + why);
  };
  for (auto it = rc.log.rbegin(); it != rc.log.rend(); ++it) {
    auto pos = std::find(cur.begin(), cur.end(), it->new_vertex);
    if (pos == cur.end()) return fail("replacement vertex missing from cycle");
    std::rotate(cur.begin(), pos, cur.end());
    // cur = new_vertex, next, ..., prev
    const Vertex next = cur[1], prev = cur.back();
    VertexPath out;
    if (it->kind == ReplacementRecord::Kind::Endpoints) {
      if (next == it->a && prev == it->b) {
        out.push_back(it->path[0]);
        out.insert(out.end(), cur.begin() + 1, cur.end());
        out.push_back(it->path[1]);
      } else if (next == it->b && prev == it->a) {
        out.push_back(it->path[0]);
        out.insert(out.end(), cur.rbegin(), cur.rend() - 1);
        out.push_back(it->path[1]);
      } else {
        return fail("x12 neighbours do not match the record");
      }
      cur = std::move(out);
      break;
    }
    // Orientation: prev - P - next with u adjacent to a (u') and v to b (v').
    VertexPath p = it->path;
    if (prev == it->b && next == it->a)
      std::reverse(p.begin(), p.end());
    else if (prev != it->a || next != it->b)
      return fail("contracted vertex neighbours do not match the record");
    out.insert(out.end(), p.begin(), p.end());
    out.insert(out.end(), cur.begin() + 1, cur.end());
    cur = std::move(out);
  }
  if (!is_hamilton_path(rc.host, cur) || cur.front() != rc.x1 || cur.back() != rc.x2)
    return fail("lifted path failed verification");
  ++g_lifts;
  return cur;
}

Sparsification d_sparsify(const ReducedCore& rc, double D, RngSeed seed) {
  if (D < 5) throw InvalidInput("d_sparsify needs D >= 5");
  const Graph& hs = rc.hstar;
  const int cap = static_cast<int>(D);
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(hs.id_space());
  for (Vertex v : hs.vertices()) {
    auto nb = hs.neighbors(v);
    std::vector<Vertex> pick(nb.begin(), nb.end());
    if (static_cast<int>(pick.size()) > cap) {
      for (int i = 0; i < cap; ++i) std::swap(pick[i], pick[i + rng.below(pick.size() - i)]);
      pick.resize(cap);
    }
    for (Vertex w : pick) {
      adj[v].push_back(w);
      adj[w].push_back(v);
    }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  Sparsification sp;
  sp.D = D;
  sp.fstar = Graph::from_adjacency(hs.id_space(), hs.vertices(), std::move(adj));
  sp.mindeg_ok = sp.fstar.min_degree() >= 2;
  // Every vertex has at most one F*-neighbour inside N_{F*}(S* u T*).
  std::vector<char> near(hs.id_space(), 0);
  for (const VertexSet* set : {&rc.s_star, &rc.t_star})
    for (Vertex s : *set)
      for (Vertex w : sp.fstar.neighbors(s)) near[w] = 1;
  for (Vertex v : hs.vertices()) {
    int c = 0;
    for (Vertex w : sp.fstar.neighbors(v)) c += near[w];
    if (c > 1) {
      sp.neighbor_ok = false;
      sp.neighbor_witness = v;
      break;
    }
  }
  return sp;
}

namespace {

// Candidate path neighbours of an endpoint: a degree-2 neighbour is forced.
std::vector<Vertex> endpoint_candidates(const Graph& h, Vertex x) {
  std::vector<Vertex> forced, rest;
  for (Vertex w : h.neighbors(x)) (h.degree(w) == 2 ? forced : rest).push_back(w);
  if (forced.size() > 1) return {};
  if (forced.size() == 1) return forced;
  return rest;
}

}  // namespace

ReductionOutcome hamilton_path_via_reduction(const Graph& h, double D, Vertex x1, Vertex x2,
                                             RngSeed seed, const ReductionBudget& budget,
                                             const ReductionOptions& opt) {
  ReductionOutcome out;
  // Validates the inputs once with the default neighbour choice.
  ReducedCore first = build_reduced_core(h, D, x1, x2, opt);
  auto c1 = endpoint_candidates(h, x1);
  auto c2 = endpoint_candidates(h, x2);
  if (c1.empty() || c2.empty()) {
    out.stage = "endpoints";
    out.detail = "an endpoint has two forced degree-2 neighbours";
    return out;
  }
  std::vector<std::pair<Vertex, Vertex>> choices;
  for (Vertex a : c1)
    for (Vertex b : c2)
      if (a != b) choices.push_back({a, b});
  if (opt.u1 && opt.u2) choices.insert(choices.begin(), {*opt.u1, *opt.u2});
  Rng rng(seed);
  if (choices.size() > 1) {
    std::vector<std::pair<Vertex, Vertex>> tail(choices.begin() + 1, choices.end());
    rng.shuffle(tail);
    std::copy(tail.begin(), tail.end(), choices.begin() + 1);
  }
  const int tries = std::min<int>(choices.size(), 1 + budget.uv_alternatives);
  for (int c = 0; c < tries; ++c) {
    out.uv_tried = c + 1;
    ReductionOptions o = opt;
    o.u1 = choices[c].first;
    o.u2 = choices[c].second;
    ReducedCore rc = (c == 0 && first.log.front().a == o.u1 && first.log.front().b == o.u2)
                         ? first
                         : build_reduced_core(h, D, x1, x2, o);
    if (auto why = cycle_obstruction(rc.hstar)) {
      out.stage = "hamilton";
      out.detail = "H* is not Hamiltonian: " + *why;
      continue;
    }
    std::optional<Sparsification> accepted;
    for (int a = 0; a < budget.sparsify_attempts && !accepted; ++a) {
      ++out.sparsify_attempts;
      auto sp = d_sparsify(rc, budget.sparsify_D, derive_seed(seed, {static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(a), 1}));
      if (components(sp.fstar).size() != 1) continue;
      ExpanderOptions eo;
      eo.exhaustive_cap = 1;
      eo.samples = budget.expansion_samples;
      eo.seed = derive_seed(seed, {static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(a), 2});
      auto ev = expander_check(sp.fstar, 2.0, std::max(1, sp.fstar.order() / 7), eo);
      if (ev.violation) {
        // The booster loop compensates for weak expansion; keep the last candidate.
        if (a + 1 == budget.sparsify_attempts) {
          out.expansion_flag = true;
          accepted = std::move(sp);
        }
        continue;
      }
      accepted = std::move(sp);
    }
    if (!accepted) {
      out.stage = "sparsify";
      out.detail = "no connected sparsification";
      continue;
    }
    auto res = booster_hamilton_cycle(rc.hstar, accepted->fstar,
                                      derive_seed(seed, {static_cast<std::uint64_t>(c), 3}), budget.ham, rc.u_star);
    out.boosters += static_cast<int>(res.boosters.size());
    if (!res.found()) {
      out.stage = "hamilton";
      out.detail = res.reason;
      continue;
    }
    out.path = lift_cycle(rc, res.path);
    out.stage.clear();
    out.detail.clear();
    return out;
  }
  return out;
}

}  // namespace sepaths
