#include "sepaths/hamilton.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sepaths/errors.hpp"

namespace sepaths {

namespace {

struct Local {
  int k = 0;
  std::vector<Vertex> ids;
  std::vector<int> index;
  std::vector<std::vector<int>> adj;
};

Local localize(const Graph& g) {
  Local L;
  L.k = g.order();
  L.ids = g.vertices();
  L.index.assign(g.id_space(), -1);
  for (int i = 0; i < L.k; ++i) L.index[L.ids[i]] = i;
  L.adj.resize(L.k);
  for (int i = 0; i < L.k; ++i) {
    for (Vertex w : g.neighbors(L.ids[i])) L.adj[i].push_back(L.index[w]);
    std::sort(L.adj[i].begin(), L.adj[i].end());
  }
  return L;
}

VertexPath globalize(const Local& L, const std::vector<int>& p) {
  VertexPath out;
  out.reserve(p.size());
  for (int v : p) out.push_back(L.ids[v]);
  return out;
}

bool connected(const Local& L) {
  if (L.k == 0) return true;
  std::vector<char> seen(L.k, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : L.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == L.k;
}

// Largest number of components left by deleting one vertex of a connected graph,
// with the vertex attaining it.
std::pair<int, int> worst_cut(const Local& L) {
  const int k = L.k;
  std::vector<int> disc(k, -1), low(k, 0), parent(k, -1), split(k, 0);
  std::vector<std::size_t> it(k, 0);
  int timer = 0;
  disc[0] = low[0] = timer++;
  std::vector<int> stack{0};
  int root_children = 0;
  while (!stack.empty()) {
    int v = stack.back();
    if (it[v] < L.adj[v].size()) {
      int w = L.adj[v][it[v]++];
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        stack.push_back(w);
        if (v == 0) ++root_children;
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      int p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) ++split[p];
      }
    }
  }
  std::pair<int, int> best{k > 1 ? 1 : 0, -1};
  if (k > 1 && root_children > best.first) best = {root_children, 0};
  for (int v = 1; v < k; ++v)
    if (split[v] + 1 > best.first) best = {split[v] + 1, v};
  return best;
}

std::optional<std::string> local_cycle_obstruction(const Local& L) {
  const int k = L.k;
  if (k < 3) return "fewer than 3 vertices";
  if (!connected(L)) return "disconnected";
  for (int v = 0; v < k; ++v)
    if (L.adj[v].size() < 2) return "vertex " + std::to_string(L.ids[v]) + " has degree < 2";
  // Edges at degree-2 vertices are forced into every Hamilton cycle.
  std::vector<int> forced_deg(k, 0);
  std::vector<int> uf(k);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::pair<int, int>> forced;
  for (int v = 0; v < k; ++v)
    if (L.adj[v].size() == 2)
      for (int w : L.adj[v])
        if (L.adj[w].size() != 2 || v < w) forced.push_back({std::min(v, w), std::max(v, w)});
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  int forced_edges_in_comp = 0;
  std::vector<int> comp_edges(k, 0), comp_size(k, 1);
  for (auto [a, b] : forced) {
    if (++forced_deg[a] > 2)
      return "vertex " + std::to_string(L.ids[a]) + " has 3 forced cycle edges";
    if (++forced_deg[b] > 2)
      return "vertex " + std::to_string(L.ids[b]) + " has 3 forced cycle edges";
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      if (comp_size[ra] < k) return "forced edges close a short cycle";
    } else {
      uf[ra] = rb;
      comp_size[rb] += comp_size[ra];
    }
    ++forced_edges_in_comp;
  }
  auto [parts, cut] = worst_cut(L);
  if (parts >= 2) return "cut vertex " + std::to_string(L.ids[cut]);
  return std::nullopt;
}

std::optional<std::string> local_path_obstruction(const Local& L) {
  const int k = L.k;
  if (k <= 1) return std::nullopt;
  if (!connected(L)) return "disconnected";
  int leaves = 0;
  for (int v = 0; v < k; ++v)
    if (L.adj[v].size() == 1) ++leaves;
  if (leaves > 2) return std::to_string(leaves) + " vertices of degree 1";
  // A vertex keeps at most two of its degree-2 neighbours; each other one is an endpoint.
  if (k >= 3) {
    int endpoints = leaves;
    for (int v = 0; v < k; ++v) {
      int twos = 0;
      for (int w : L.adj[v]) twos += L.adj[w].size() == 2;
      endpoints += std::max(0, twos - 2);
    }
    if (endpoints > 2) return std::to_string(endpoints) + " forced endpoints";
  }
  auto [parts, cut] = worst_cut(L);
  if (parts >= 3) return "cut vertex " + std::to_string(L.ids[cut]) + " leaves 3 components";
  return std::nullopt;
}

// Held-Karp over (subset, end). start < 0: free start.
std::optional<std::vector<int>> held_karp(const Local& L, bool cycle) {
  const int k = L.k;
  if (k > 20) throw std::logic_error("held_karp: order too large");
  if (k == 0) return std::nullopt;
  if (k == 1) {
    if (cycle) return std::nullopt;
    return std::vector<int>{0};
  }
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> dp(std::size_t{1} << k, 0);
  std::vector<std::uint32_t> nb(k, 0);
  for (int v = 0; v < k; ++v)
    for (int w : L.adj[v]) nb[v] |= std::uint32_t{1} << w;
  if (cycle)
    dp[1] = 1;
  else
    for (int v = 0; v < k; ++v) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = dp[mask];
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t out = nb[v] & ~mask;
      while (out) {
        int w = std::countr_zero(out);
        out &= out - 1;
        dp[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  std::uint32_t ends = dp[full];
  if (cycle) ends &= nb[0];
  if (!ends) return std::nullopt;
  std::vector<int> path;
  int v = std::countr_zero(ends);
  std::uint32_t mask = full;
  while (true) {
    path.push_back(v);
    std::uint32_t prev = mask & ~(std::uint32_t{1} << v);
    if (prev == 0) break;
    std::uint32_t cand = dp[prev] & nb[v];
    v = std::countr_zero(cand);
    mask = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

class Engine {
 public:
  Engine(std::vector<std::vector<int>> adj, bool cycle, Rng& rng)
      : adj_(std::move(adj)), k_(static_cast<int>(adj_.size())), cycle_(cycle), rng_(rng) {}

  const std::vector<std::vector<int>>* host = nullptr;
  std::vector<char> preferred;
  int max_boosters = 0;
  std::vector<std::pair<int, int>> boosters;
  std::vector<int> best;
  long long rotations = 0;

  const std::vector<int>& path() const { return P_; }

  bool run(int start, long long limit, long long stall_limit) {
    reset(start);
    long long rot = 0, stall = 0;
    while (true) {
      if (done()) return true;
      if (static_cast<int>(P_.size()) < k_) {
        int e = P_.back();
        if (free_[e] > 0 && extend(e)) {
          stall = 0;
          continue;
        }
        if (free_[P_.front()] > 0 && can_extend(P_.front())) {
          reverse_path();
          continue;
        }
      }
      if (rot >= limit) return false;
      if (host && stall >= stall_limit && static_cast<int>(boosters.size()) < max_boosters) {
        if (boost()) {
          stall = 0;
          continue;
        }
        stall = std::numeric_limits<long long>::min() / 2;
      }
      int used = lookahead();
      if (used == 0) {
        if (rng_.below(4) == 0) reverse_path();
        random_rotation();
        used = 1;
      }
      rot += used;
      stall += used;
      rotations += used;
    }
  }

 private:
  std::vector<std::vector<int>> adj_;
  int k_;
  bool cycle_;
  Rng& rng_;
  std::vector<int> P_, pos_, free_;

  bool adjacent(int a, int b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  void reset(int start) {
    P_.clear();
    pos_.assign(k_, -1);
    free_.assign(k_, 0);
    for (int v = 0; v < k_; ++v) free_[v] = static_cast<int>(adj_[v].size());
    push(start);
  }

  void push(int v) {
    pos_[v] = static_cast<int>(P_.size());
    P_.push_back(v);
    for (int w : adj_[v]) --free_[w];
    if (P_.size() > best.size()) best = P_;
  }

  // In path mode a degree-1 vertex is a dead end; it is entered only last.
  bool terminal(int w) const {
    return !cycle_ && adj_[w].size() == 1 && static_cast<int>(P_.size()) + 1 < k_;
  }

  bool can_extend(int e) const {
    for (int w : adj_[e])
      if (pos_[w] < 0 && !terminal(w)) return true;
    return false;
  }

  bool extend(int e) {
    int pick = -1, pick_free = 0, ties = 0;
    for (int w : adj_[e]) {
      if (pos_[w] >= 0 || terminal(w)) continue;
      if (pick < 0 || free_[w] < pick_free) {
        pick = w;
        pick_free = free_[w];
        ties = 1;
      } else if (free_[w] == pick_free && rng_.below(++ties) == 0) {
        pick = w;
      }
    }
    if (pick < 0) return false;
    push(pick);
    return true;
  }

  bool done() const {
    if (static_cast<int>(P_.size()) < k_) return false;
    return !cycle_ || (k_ >= 3 && adjacent(P_.back(), P_.front()));
  }

  bool good_end(int c) const {
    if (static_cast<int>(P_.size()) < k_) return free_[c] > 0 && (cycle_ || can_extend(c));
    return cycle_ && adjacent(c, P_.front());
  }

  void reverse_path() {
    std::reverse(P_.begin(), P_.end());
    for (int i = 0; i < static_cast<int>(P_.size()); ++i) pos_[P_[i]] = i;
  }

  // New end becomes P[i+1]; P[i] must be adjacent to the current end.
  void rotate_at(int i) {
    std::reverse(P_.begin() + i + 1, P_.end());
    for (int t = i + 1; t < static_cast<int>(P_.size()); ++t) pos_[P_[t]] = t;
  }

  int lookahead() {
    const int L = static_cast<int>(P_.size());
    const int e = P_.back();
    int best_c = -1, best_i = -1;
    for (int w : adj_[e]) {
      int i = pos_[w];
      if (i < 0 || i >= L - 2) continue;
      int c = P_[i + 1];
      if (good_end(c) && (best_c < 0 || c < best_c)) {
        best_c = c;
        best_i = i;
      }
    }
    if (best_c >= 0) {
      rotate_at(best_i);
      return 1;
    }
    int best_t = -1;
    for (int w1 : adj_[e]) {
      int i = pos_[w1];
      if (i < 0 || i >= L - 2) continue;
      int c1 = P_[i + 1];
      for (int w2 : adj_[c1]) {
        int j = pos_[w2];
        if (j < 0) continue;
        int t = j <= i ? j : i + 1 + (L - 1 - j);
        if (t >= L - 2) continue;
        int t1 = t + 1;
        int c2 = t1 <= i ? P_[t1] : P_[L + i - t1];
        if (good_end(c2) && (best_c < 0 || c2 < best_c)) {
          best_c = c2;
          best_i = i;
          best_t = t;
        }
      }
    }
    if (best_c >= 0) {
      rotate_at(best_i);
      rotate_at(best_t);
      return 2;
    }
    return 0;
  }

  void random_rotation() {
    const int L = static_cast<int>(P_.size());
    if (L < 3) return;
    const int e = P_.back();
    std::vector<int> pivots;
    for (int w : adj_[e])
      if (pos_[w] >= 0 && pos_[w] < L - 2) pivots.push_back(pos_[w]);
    if (pivots.empty()) return;
    rotate_at(pivots[rng_.below(pivots.size())]);
  }

  void add_edge(int a, int b) {
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
    if (pos_[b] < 0) ++free_[a];
    if (pos_[a] < 0) ++free_[b];
    boosters.push_back({a, b});
  }

  void set_path(std::vector<int> q) {
    for (int v : P_) pos_[v] = -1;
    P_ = std::move(q);
    for (int i = 0; i < static_cast<int>(P_.size()); ++i) pos_[P_[i]] = i;
  }

  // Close the current path into a cycle and reopen it so that the new end is P[i].
  void reopen(int i) {
    std::vector<int> q;
    q.reserve(P_.size());
    for (int t = i + 1; t < static_cast<int>(P_.size()); ++t) q.push_back(P_[t]);
    for (int t = 0; t <= i; ++t) q.push_back(P_[t]);
    set_path(std::move(q));
  }

  bool boost() {
    const int L = static_cast<int>(P_.size());
    const std::size_t max_states = 64;
    std::vector<std::vector<int>> states;
    states.reserve(max_states);  // Q below refers into states while it grows
    states.push_back(P_);
    std::vector<char> seen(k_, 0);
    seen[P_.back()] = 1;
    std::vector<int> qpos(k_, -1);
    int best_state = -1, best_x = -1, best_rank = 3;
    for (std::size_t si = 0; si < states.size() && best_rank > 0; ++si) {
      const auto& Q = states[si];
      std::fill(qpos.begin(), qpos.end(), -1);
      for (int i = 0; i < L; ++i) qpos[Q[i]] = i;
      int b = Q.back();
      for (int x : (*host)[b]) {
        if (adjacent(b, x)) continue;
        bool extension = qpos[x] < 0;
        bool closing = x == Q.front() && L >= 3;
        if (!extension && !closing) continue;
        int rank = (!preferred.empty() && preferred[b] && preferred[x]) ? 0 : 1;
        if (rank < best_rank) {
          best_rank = rank;
          best_state = static_cast<int>(si);
          best_x = x;
          if (rank == 0) break;
        }
      }
      if (best_rank == 0) break;
      for (int w : adj_[b]) {
        int i = qpos[w];
        if (i < 0 || i >= L - 2 || seen[Q[i + 1]] || states.size() >= max_states) continue;
        seen[Q[i + 1]] = 1;
        std::vector<int> r(Q);
        std::reverse(r.begin() + i + 1, r.end());
        states.push_back(std::move(r));
      }
    }
    if (best_state < 0) return false;
    set_path(std::move(states[best_state]));
    int b = P_.back();
    add_edge(b, best_x);
    if (pos_[best_x] >= 0 && L < k_) {
      for (int i = 0; i < L; ++i)
        if (free_[P_[i]] > 0) {
          reopen(i);
          return true;
        }
      for (int i = 0; i < L; ++i)
        for (int x : (*host)[P_[i]])
          if (pos_[x] < 0 && static_cast<int>(boosters.size()) < max_boosters) {
            add_edge(P_[i], x);
            reopen(i);
            return true;
          }
    }
    return true;
  }
};

enum class Mode { Cycle, Path };

HamiltonResult search(const Graph& g, Mode mode, RngSeed seed, const HamiltonBudget& budget,
                      const Graph* host = nullptr, const VertexSet* preferred = nullptr,
                      bool certify_first = true) {
  HamiltonResult res;
  const bool cycle = mode == Mode::Cycle;
  const Graph& truth = host ? *host : g;
  Local L = localize(g);
  if (cycle && L.k < 3) {
    res.status = HamiltonStatus::Impossible;
    res.reason = "fewer than 3 vertices";
    return res;
  }
  if (!cycle && L.k <= 1) {
    res.status = HamiltonStatus::Found;
    res.path = L.ids;
    res.longest = res.path;
    return res;
  }
  Local LH = host ? localize(*host) : Local{};
  const Local& certify = host ? LH : L;
  if (certify_first) {
    if (auto why = cycle ? local_cycle_obstruction(certify) : local_path_obstruction(certify)) {
      res.status = HamiltonStatus::Impossible;
      res.reason = *why;
      return res;
    }
  }
  if (certify_first && certify.k <= budget.exact_cap) {
    auto p = held_karp(certify, cycle);
    if (p) {
      res.status = HamiltonStatus::Found;
      res.path = globalize(certify, *p);
    } else {
      res.status = HamiltonStatus::Impossible;
      res.reason = "exhaustive search";
    }
    res.longest = res.path;
    return res;
  }
  Rng rng(seed);
  std::vector<int> starts;
  if (!cycle)
    for (int v = 0; v < L.k; ++v)
      if (L.adj[v].size() == 1) starts.push_back(v);
  const long long limit = static_cast<long long>(budget.rotations_per_vertex) * L.k;
  const long long stall = std::max<long long>(1, static_cast<long long>(budget.stall_per_vertex * L.k));
  std::vector<std::vector<int>> adj = L.adj;
  std::vector<std::pair<int, int>> added;
  std::vector<int> longest;
  for (int r = 0; r < budget.restarts; ++r) {
    Engine e(adj, cycle, rng);
    if (host) {
      e.host = &LH.adj;
      e.max_boosters = (budget.max_boosters < 0 ? L.k : budget.max_boosters) -
                       static_cast<int>(added.size());
      if (preferred) {
        e.preferred.assign(L.k, 0);
        for (Vertex v : *preferred)
          if (v >= 0 && v < g.id_space() && L.index[v] >= 0) e.preferred[L.index[v]] = 1;
      }
    }
    int start = starts.empty() ? static_cast<int>(rng.below(L.k)) : starts[rng.below(starts.size())];
    bool ok = e.run(start, limit, stall);
    res.rotations += e.rotations;
    res.restarts = r + 1;
    for (auto [a, b] : e.boosters) {
      added.push_back({a, b});
      adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b);
      adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
    }
    if (e.best.size() > longest.size()) longest = e.best;
    if (ok) {
      res.status = HamiltonStatus::Found;
      res.path = globalize(L, e.path());
      break;
    }
  }
  for (auto [a, b] : added) res.boosters.push_back({std::min(L.ids[a], L.ids[b]), std::max(L.ids[a], L.ids[b])});
  res.longest = globalize(L, longest);
  if (res.found()) {
    bool valid = cycle ? is_hamilton_cycle(truth, res.path) : is_hamilton_path(truth, res.path);
    if (!valid) throw std::logic_error("hamilton engine produced an invalid result");
    res.longest = res.path;
  } else {
    res.reason = "rotation budget exhausted";
  }
  return res;
}

}  // namespace

HamiltonResult hamilton_cycle(const Graph& g, RngSeed seed, const HamiltonBudget& budget) {
  return search(g, Mode::Cycle, seed, budget);
}

HamiltonResult hamilton_path(const Graph& g, RngSeed seed, const HamiltonBudget& budget) {
  return search(g, Mode::Path, seed, budget);
}

HamiltonResult longest_path(const Graph& g, RngSeed seed, const HamiltonBudget& budget) {
  return search(g, Mode::Path, seed, budget, nullptr, nullptr, false);
}

HamiltonResult hamilton_path_endpoints(const Graph& g, Vertex x, Vertex y, RngSeed seed,
                                       const HamiltonBudget& budget) {
  g.require(x);
  g.require(y);
  if (x == y) throw InvalidInput("endpoints must differ");
  const Vertex aux = g.id_space();
  std::vector<std::vector<Vertex>> adj(g.id_space() + 1);
  for (Vertex v : g.vertices()) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  adj[x].push_back(aux);
  adj[y].push_back(aux);
  adj[aux] = {std::min(x, y), std::max(x, y)};
  VertexSet present = g.vertices();
  present.push_back(aux);
  Graph g2 = Graph::from_adjacency(g.id_space() + 1, present, std::move(adj));
  HamiltonResult r = search(g2, Mode::Cycle, seed, budget);
  auto strip = [&](const VertexPath& p) {
    VertexPath out;
    auto it = std::find(p.begin(), p.end(), aux);
    if (it == p.end()) return p;
    out.insert(out.end(), it + 1, p.end());
    out.insert(out.end(), p.begin(), it);
    return out;
  };
  r.longest = strip(r.longest);
  if (r.found()) {
    r.path = strip(r.path);
    if (r.path.front() != x) std::reverse(r.path.begin(), r.path.end());
    if (!is_hamilton_path(g, r.path) || r.path.front() != x || r.path.back() != y)
      throw std::logic_error("pinned hamilton path failed verification");
  }
  return r;
}

HamiltonResult booster_hamilton_cycle(const Graph& host, const Graph& sparse, RngSeed seed,
                                      const HamiltonBudget& budget, const VertexSet& preferred) {
  if (host.vertices() != sparse.vertices())
    throw InvalidInput("booster search: sparse graph must span the host");
  return search(sparse, Mode::Cycle, seed, budget, &host, &preferred);
}

std::optional<VertexPath> exact_hamilton_cycle(const Graph& g) {
  Local L = localize(g);
  if (L.k < 3) return std::nullopt;
  auto p = held_karp(L, true);
  if (!p) return std::nullopt;
  return globalize(L, *p);
}

std::optional<VertexPath> exact_hamilton_path(const Graph& g) {
  Local L = localize(g);
  auto p = held_karp(L, false);
  if (!p) return std::nullopt;
  return globalize(L, *p);
}

std::optional<std::string> cycle_obstruction(const Graph& g) {
  return local_cycle_obstruction(localize(g));
}

std::optional<std::string> path_obstruction(const Graph& g) {
  return local_path_obstruction(localize(g));
}

bool posa_check(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> d;
  for (Vertex v : g.vertices()) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  for (int i = 1; i <= (n - 2) / 2; ++i)
    if (d[i - 1] < i + 1) return false;
  if (n % 2 == 1) {
    int h = (n + 1) / 2;
    if (d[h - 1] < h) return false;
  }
  return true;
}

}  // namespace sepaths
