#include "sepaths/critical_sep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "sepaths/errors.hpp"
#include "sepaths/kernels.hpp"

namespace sepaths {

int critical_ell(std::int64_t n, double C) {
  if (n < 3) return 1;
  const double ln = std::log(static_cast<double>(n));
  return std::max(1, static_cast<int>(std::ceil(std::log2(static_cast<double>(n)) / 2 + C * std::log(ln))));
}

CodeAssignment code_assign(int n, double C, int C1, RngSeed seed, const std::vector<int>& reserved) {
  if (n < 1) throw InvalidInput("code_assign needs n >= 1");
  CodeAssignment ca;
  ca.C = C;
  ca.C1 = C1;
  ca.ell = critical_ell(n, C);
  ca.override_constants = !(C >= 3.0 * C1 && 3 * C1 >= 12);
  const int len = 2 * ca.ell;
  const double ln = std::log(std::max(3, n));
  const int N = n + static_cast<int>(std::ceil(n / (ln * ln * ln)));
  ca.sampled = N;
  Rng rng(seed);
  std::vector<int> coords(len);
  std::vector<Bitstring> pool(N, Bitstring(len));
  for (auto& v : pool) {
    for (int i = 0; i < len; ++i) coords[i] = i;
    for (int i = 0; i < ca.ell; ++i) {
      std::swap(coords[i], coords[i + rng.below(len - i)]);
      v.set(coords[i]);
    }
  }
  const int r = static_cast<int>(reserved.size());
  if (r > n) throw InvalidInput("more reserved vertices than vertices");
  // The first r vectors of a random order go to the reserved vertices.
  std::vector<int> order(N);
  for (int i = 0; i < N; ++i) order[i] = i;
  rng.shuffle(order);
  auto close = hamming_close_parallel(pool, C1);
  std::vector<int> survivors;
  for (int k = r; k < N; ++k)
    if (!close[order[k]]) survivors.push_back(order[k]);
  ca.survivors = static_cast<int>(survivors.size());
  if (ca.survivors < n - r)
    throw StrategyFailure("code_assign", std::to_string(ca.survivors) + " survivors for " +
                                             std::to_string(n - r) + " vertices");
  rng.shuffle(survivors);
  survivors.resize(n - r);
  std::vector<char> is_reserved(n, 0);
  for (int v : reserved) {
    if (v < 0 || v >= n || is_reserved[v]) throw InvalidInput("bad reserved index");
    is_reserved[v] = 1;
  }
  ca.vectors.assign(n, Bitstring(len));
  std::vector<int> reserved_shuffled = reserved;
  rng.shuffle(reserved_shuffled);
  for (int k = 0; k < r; ++k) ca.vectors[reserved_shuffled[k]] = pool[order[k]];
  std::size_t next = 0;
  for (int v = 0; v < n; ++v)
    if (!is_reserved[v]) ca.vectors[v] = pool[survivors[next++]];
  ca.sets.assign(len, {});
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < len; ++j)
      if (ca.vectors[v].test(j)) ca.sets[j].push_back(v);
  return ca;
}

VertexSet core_membership_rule(const Graph& g, const VertexSet& S) {
  std::vector<char> in(g.id_space(), 0);
  for (Vertex v : S) {
    g.require(v);
    in[v] = 1;
  }
  std::vector<int> deg_in(g.id_space(), 0);
  for (Vertex v : S)
    for (Vertex w : g.neighbors(v)) deg_in[v] += in[w];
  VertexSet out;
  for (Vertex v : S) {
    if (deg_in[v] >= 3) {
      out.push_back(v);
    } else if (deg_in[v] == 2) {
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (in[w] && deg_in[w] < 2) ok = false;
      if (ok) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DegreeStats degree_stats(const Graph& g, double p, int K1) {
  if (!(p > 0 && p < 1)) throw InvalidInput("degree_stats needs p in (0, 1)");
  DegreeStats st;
  const int n = g.order();
  for (Vertex v : g.vertices()) ++st.X[g.degree(v)];
  const double ln = std::log(std::max(3, n));
  st.K1 = K1 >= 0 ? K1 : static_cast<int>(std::floor(std::max(3.0, ln / 10)));
  for (int k = 0; k <= st.K1 && k < n; ++k) {
    double lg = std::lgamma(n) - std::lgamma(k + 1) - std::lgamma(n - k) + k * std::log(p) +
                (n - 1 - k) * std::log1p(-p);
    st.model[k] = n * std::exp(lg);
  }
  st.K0 = 2;
  for (int k = 0; k <= 2; ++k)
    if (st.model.count(k) && st.model[k] >= 10) {
      st.K0 = k;
      break;
    }
  for (int k = st.K0; k <= st.K1; ++k) {
    if (!st.model.count(k)) continue;
    double nk = st.model[k];
    double xk = st.X.count(k) ? static_cast<double>(st.X[k]) : 0.0;
    double tol = nk > std::exp(1.0) ? nk / std::log(nk) : nk;
    if (std::abs(xk - nk) > tol) st.flagged.push_back(k);
  }
  return st;
}

LeafTriplets separate_leaves(const Graph& g, const VertexSet& leaves) {
  LeafTriplets out;
  VertexSet giant = giant_component(g);
  std::vector<char> in_giant(g.id_space(), 0);
  for (Vertex v : giant) in_giant[v] = 1;
  VertexSet inside;
  for (Vertex l : leaves) {
    if (in_giant[l]) {
      inside.push_back(l);
    } else {
      out.paths.add({l});
      ++out.outside;
    }
  }
  std::sort(inside.begin(), inside.end());
  out.giant = static_cast<int>(inside.size());
  std::size_t i = 0;
  for (; i + 2 < inside.size(); i += 3) {
    out.paths.add(shortest_path(g, inside[i], inside[i + 1]));
    out.paths.add(shortest_path(g, inside[i + 1], inside[i + 2]));
  }
  const std::size_t r = inside.size() - i;
  if (r == 1) {
    out.paths.add({inside[i]});
  } else if (r == 2) {
    out.paths.add(shortest_path(g, inside[i], inside[i + 1]));
    out.paths.add({inside[i]});
  }
  return out;
}

namespace {

struct CoordinatePath {
  VertexPath path;
  bool closed = false;
  int kind = 0;  // 0 empty core, 1 cycle, 2 Hamilton path, 3 fallback
  int uncovered = 0;
  VertexSet core;
  std::string failure;
};

CoordinatePath cover_core(const Graph& core, RngSeed seed, const CriticalParams& params) {
  CoordinatePath cp;
  cp.core = core.vertices();
  if (core.order() == 0) return cp;
  auto c = hamilton_cycle(core, derive_seed(seed, {1}), params.ham);
  if (c.found()) {
    cp.path = c.path;
    cp.closed = true;
    cp.kind = 1;
    return cp;
  }
  auto p = hamilton_path(core, derive_seed(seed, {2}), params.ham);
  if (p.found()) {
    cp.path = p.path;
    cp.kind = 2;
    return cp;
  }
  cp.failure = "cycle: " + c.reason + "; path: " + p.reason;
  if (params.strict) return cp;
  HamiltonBudget fb = params.ham;
  fb.restarts = std::max(1, params.fallback_restarts);
  auto lp = longest_path(core, derive_seed(seed, {3}), fb);
  const VertexPath& best = lp.longest.size() >= p.longest.size() ? lp.longest : p.longest;
  cp.path = best.empty() ? VertexPath{core.vertices().front()} : best;
  cp.kind = 3;
  cp.uncovered = core.order() - static_cast<int>(cp.path.size());
  return cp;
}

// Maximum bipartite matching by augmenting paths; adj[i] lists right vertices.
std::vector<int> max_matching(const std::vector<std::vector<int>>& adj, int right) {
  std::vector<int> match_r(right, -1), match_l(adj.size(), -1);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    std::vector<char> seen(right, 0);
    auto augment = [&](auto&& self, int u) -> bool {
      for (int v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        if (match_r[v] < 0 || self(self, match_r[v])) {
          match_r[v] = u;
          match_l[u] = v;
          return true;
        }
      }
      return false;
    };
    augment(augment, static_cast<int>(i));
  }
  return match_l;
}

// Pósa rotations keep the vertex set of p; search them (breadth first, at
// most max_states paths) for one whose last vertex is marked in want.
bool rotate_to_end(const Graph& g, VertexPath& p, const std::vector<char>& want, std::size_t max_states) {
  if (p.empty()) return false;
  std::vector<VertexPath> states{p, VertexPath(p.rbegin(), p.rend())};
  std::vector<char> seen(g.id_space(), 0);
  seen[p.back()] = seen[p.front()] = 1;
  std::vector<int> pos(g.id_space(), -1);
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (want[states[s].back()]) {
      p = std::move(states[s]);
      return true;
    }
    const int L = static_cast<int>(states[s].size());
    for (int i = 0; i < L; ++i) pos[states[s][i]] = i;
    for (Vertex w : g.neighbors(states[s].back())) {
      const int i = pos[w];
      if (i < 0 || i >= L - 2 || seen[states[s][i + 1]] || states.size() >= max_states) continue;
      seen[states[s][i + 1]] = 1;
      VertexPath r = states[s];
      std::reverse(r.begin() + i + 1, r.end());
      states.push_back(std::move(r));
    }
    for (Vertex v : states[s]) pos[v] = -1;
  }
  return false;
}

}  // namespace

CriticalResult separate_critical(const Graph& g, RngSeed seed, const CriticalParams& params) {
  const int n = g.order();
  if (n < 1) throw InvalidInput("separate_critical needs a nonempty graph");
  CriticalResult res;
  CriticalMetrics& M = res.metrics;
  const VertexSet& V = g.vertices();
  std::vector<int> index(g.id_space(), -1);
  for (int i = 0; i < n; ++i) index[V[i]] = i;

  VertexSet isolated, leaves;
  for (Vertex v : V) {
    if (g.degree(v) == 0) isolated.push_back(v);
    if (g.degree(v) == 1) leaves.push_back(v);
  }
  M.X0 = static_cast<int>(isolated.size());
  M.X1 = static_cast<int>(leaves.size());
  const VertexSet giant = giant_component(g);
  std::vector<char> in_giant(g.id_space(), 0);
  for (Vertex v : giant) in_giant[v] = 1;

  // Leaf pairing candidates: giant leaves whose parent has five further neighbours,
  // with pairwise disjoint sets T_i.
  std::vector<Vertex> pl;
  std::vector<VertexSet> T;
  std::vector<int> reserved;
  if (params.leaf_pairing) {
    std::vector<char> used(g.id_space(), 0);
    for (Vertex l : leaves) {
      if (!in_giant[l]) continue;
      Vertex z = g.neighbors(l).front();
      VertexSet t = {l, z};
      for (Vertex w : g.neighbors(z))
        if (w != l && static_cast<int>(t.size()) < 7) t.push_back(w);
      if (t.size() < 7) continue;
      bool clash = false;
      for (Vertex w : t) clash = clash || used[w];
      if (clash) continue;
      for (Vertex w : t) {
        used[w] = 1;
        reserved.push_back(index[w]);
      }
      pl.push_back(l);
      T.push_back(make_set(t));
    }
    M.eligible_leaves = static_cast<int>(pl.size());
  }

  int C1 = params.C1;
  for (;;) {
    try {
      res.codes = code_assign(n, params.C, C1, derive_seed(seed, {0, static_cast<std::uint64_t>(M.shortfalls)}), reserved);
      break;
    } catch (const StrategyFailure&) {
      ++M.shortfalls;
      if (C1 <= 0) throw;
      --C1;
    }
  }
  M.C1_used = C1;
  M.override_constants = res.codes.override_constants;
  M.ell = res.codes.ell;
  const int len = 2 * M.ell;

  std::vector<VertexSet> S(len);
  for (int j = 0; j < len; ++j)
    for (int i : res.codes.sets[j]) S[j].push_back(V[i]);

  std::vector<CoordinatePath> cps(len);
  std::vector<double> mismatch(len, 0), rule_size(len, 0);
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < len; ++j) {
    Graph core = k_core(induced(g, S[j]), 2);
    VertexSet rule = core_membership_rule(g, S[j]);
    rule_size[j] = static_cast<double>(rule.size());
    mismatch[j] = static_cast<double>(set_minus(rule, core.vertices()).size());
    cps[j] = cover_core(core, derive_seed(seed, {1, static_cast<std::uint64_t>(j)}), params);
  }
  double mm = 0, rs = 0;
  for (int j = 0; j < len; ++j) {
    mm += mismatch[j];
    rs += rule_size[j];
    const auto& cp = cps[j];
    if (!cp.failure.empty() && params.strict)
      throw StrategyFailure("coordinate " + std::to_string(j + 1), cp.failure);
    switch (cp.kind) {
      case 0: ++M.empty_cores; break;
      case 1: ++M.core_cycles; break;
      case 2: ++M.core_paths; break;
      default: ++M.core_fallbacks; M.uncovered += cp.uncovered; break;
    }
  }
  M.rule_mismatch_rate = rs > 0 ? mm / rs : 0;

  // Leaf pairing: triplet i is valid for pair j when T of its first two leaves
  // lies in S_{2j-1} and T of its last two in S_{2j}.
  std::vector<char> leaf_done(g.id_space(), 0);
  std::vector<std::pair<VertexPath, bool>> upgraded_paths(len);
  std::vector<char> upgraded_coord(len, 0);
  std::vector<std::vector<Vertex>> upgraded_leaves;
  if (params.leaf_pairing) {
    const int t = static_cast<int>(pl.size());
    const int m = std::min(t / 3, M.ell);
    std::vector<std::vector<char>> inS(len);
    auto contains_all = [&](int j, const VertexSet& a, const VertexSet& b) {
      if (inS[j].empty()) {
        inS[j].assign(g.id_space(), 0);
        for (Vertex v : S[j]) inS[j][v] = 1;
      }
      for (const VertexSet* s : {&a, &b})
        for (Vertex v : *s)
          if (!inS[j][v]) return false;
      return true;
    };
    std::vector<std::vector<int>> lam(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (contains_all(2 * j, T[3 * i], T[3 * i + 1]) && contains_all(2 * j + 1, T[3 * i + 1], T[3 * i + 2]))
          lam[i].push_back(j);
    auto match = max_matching(lam, m);
    for (int i = 0; i < m; ++i) {
      if (match[i] < 0) continue;
      ++M.matching_size;
      const int j = match[i];
      std::pair<VertexPath, bool> got[2];
      bool ok = true;
      for (int h = 0; h < 2 && ok; ++h) {
        const int coord = 2 * j + h;
        const Vertex la = pl[3 * i + h], lb = pl[3 * i + h + 1];
        const Vertex za = g.neighbors(la).front(), zb = g.neighbors(lb).front();
        Graph core = k_core(induced(g, S[coord]), 2);
        if (!core.contains(za) || !core.contains(zb)) {
          ok = false;
          break;
        }
        std::optional<VertexPath> mid;
        RngSeed s = derive_seed(seed, {2, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(h)});
        try {
          mid = hamilton_path_via_reduction(core, params.reduction_D, za, zb, s, params.reduction).path;
        } catch (const PreconditionViolation&) {
          auto r = hamilton_path_endpoints(core, za, zb, s, params.ham);
          if (r.found()) mid = r.path;
        }
        if (!mid) {
          ok = false;
          break;
        }
        VertexPath full = {la};
        full.insert(full.end(), mid->begin(), mid->end());
        full.push_back(lb);
        got[h] = {std::move(full), false};
      }
      if (!ok) continue;
      for (int h = 0; h < 2; ++h) {
        upgraded_paths[2 * j + h] = got[h];
        upgraded_coord[2 * j + h] = 1;
      }
      upgraded_leaves.push_back({pl[3 * i], pl[3 * i + 1], pl[3 * i + 2]});
    }
  }

  std::vector<int> path_coord;  // coordinate of each output path, -1 for the rest
  auto assemble = [&](bool with_upgrades) {
    PathSystem sys;
    path_coord.clear();
    std::fill(leaf_done.begin(), leaf_done.end(), 0);
    for (int j = 0; j < len; ++j) {
      if (with_upgrades && upgraded_coord[j]) {
        sys.add(upgraded_paths[j].first, false);
      } else if (cps[j].kind != 0) {
        sys.add(cps[j].path, cps[j].closed);
      } else {
        continue;
      }
      path_coord.push_back(j);
    }
    if (with_upgrades)
      for (const auto& trip : upgraded_leaves)
        for (Vertex l : trip) leaf_done[l] = 1;
    VertexSet rest;
    for (Vertex l : leaves)
      if (!leaf_done[l]) rest.push_back(l);
    LeafTriplets lt = separate_leaves(g, rest);
    M.giant_leaves = lt.giant;
    M.outside_leaves = lt.outside;
    M.leaf_paths = static_cast<int>(lt.paths.size());
    sys.append(lt.paths);
    for (Vertex v : isolated) sys.add({v});
    M.isolated_paths = static_cast<int>(isolated.size());
    return sys;
  };

  res.system = assemble(true);
  M.upgraded = static_cast<int>(upgraded_leaves.size());
  if (M.upgraded > 0 && !verify_separation(g, res.system).separates) {
    M.reverted = M.upgraded;
    M.upgraded = 0;
    upgraded_leaves.clear();
    std::fill(upgraded_coord.begin(), upgraded_coord.end(), 0);
    res.system = assemble(false);
  }
  M.savings = 2 * M.upgraded;
  path_coord.resize(res.system.size(), -1);

  auto report = verify_separation(g, res.system);
  if (!report.separates) {
    if (params.strict) throw StrategyFailure("verify", "core cycles do not separate the vertices of degree at least 2");
    // All but one member of every code class move: by hanging the vertex onto
    // open paths, rotated and then extended through at most three vertices off
    // the path, keeping every changed code unique and every coordinate path
    // inside its vector's support; else as a singleton.
    std::map<Bitstring, VertexSet> classes;
    for (Vertex v : V) classes[report.codes[v]].push_back(v);
    std::vector<VertexSet> colliding;
    for (auto& [code, members] : classes)
      if (members.size() > 1) colliding.push_back(members);
    std::vector<char> on(g.id_space(), 0), near(g.id_space(), 0);
    std::vector<Vertex> toward(g.id_space(), -1);
    // Extends path pi so that it ends ..., z_1, ..., z_k, u with every z_i off
    // the path (k < 4 on coordinate paths, k < 9 elsewhere); returns the new
    // members, or nothing.
    auto extend_to = [&](std::size_t pi, Vertex u) -> std::optional<VertexSet> {
      auto& p = res.system.paths[pi];
      const int j = path_coord[pi];
      for (Vertex v : p.vertices) on[v] = 1;
      VertexSet reached{u}, frontier{u};
      toward[u] = u;
      for (int depth = 0; depth < (j >= 0 ? 3 : 8); ++depth) {
        VertexSet next;
        for (Vertex z : frontier)
          for (Vertex y : g.neighbors(z)) {
            if (on[y] || toward[y] >= 0) continue;
            if (j >= 0 && g.degree(y) >= 2 && !res.codes.vectors[index[y]].test(j)) continue;
            Bitstring c = report.codes[y];
            c.set(static_cast<int>(pi));
            if (classes.count(c)) continue;
            toward[y] = z;
            next.push_back(y);
            reached.push_back(y);
          }
        frontier = std::move(next);
      }
      for (Vertex z : reached)
        for (Vertex y : g.neighbors(z))
          if (on[y]) near[y] = 1;
      std::optional<VertexSet> added;
      if (rotate_to_end(g, p.vertices, near, 512)) {
        Vertex z = -1;
        for (Vertex y : g.neighbors(p.vertices.back()))
          if (toward[y] >= 0 && !on[y]) z = y;
        added.emplace();
        for (; z != u; z = toward[z]) added->push_back(z);
        added->push_back(u);
        p.vertices.insert(p.vertices.end(), added->begin(), added->end());
      }
      for (Vertex z : reached) {
        toward[z] = -1;
        for (Vertex y : g.neighbors(z)) near[y] = 0;
      }
      for (Vertex v : p.vertices) on[v] = 0;
      return added;
    };
    auto recode = [&](Vertex v, const Bitstring& from, const Bitstring& to) {
      auto& old = classes[from];
      old.erase(std::find(old.begin(), old.end(), v));
      if (old.empty()) classes.erase(from);
      classes[to].push_back(v);
    };
    auto hang = [&](Vertex u) {
      const Bitstring start = report.codes[u];
      Bitstring code = start;
      std::vector<std::pair<std::size_t, VertexPath>> undo;
      std::vector<std::pair<Vertex, Bitstring>> moved;  // chain vertices and their old codes
      bool clash = false;
      for (std::size_t pi = 0; pi < static_cast<std::size_t>(code.size()) && undo.size() < 3; ++pi) {
        auto& p = res.system.paths[pi];
        if (p.closed || code.test(static_cast<int>(pi))) continue;
        const int j = path_coord[pi];
        if (j >= 0 && g.degree(u) >= 2 && !res.codes.vectors[index[u]].test(j)) continue;
        VertexPath before = p.vertices;
        auto added = extend_to(pi, u);
        if (!added) continue;
        undo.emplace_back(pi, std::move(before));
        for (Vertex z : *added) {
          if (z == u) continue;
          Bitstring c = report.codes[z];
          c.set(static_cast<int>(pi));
          moved.emplace_back(z, report.codes[z]);
          recode(z, report.codes[z], c);
          report.codes[z] = c;
          if (classes[c].size() > 1) clash = true;
        }
        code.set(static_cast<int>(pi));
        if (clash || !classes.count(code)) break;
      }
      if (!clash && !undo.empty() && !classes.count(code)) {
        recode(u, start, code);
        report.codes[u] = code;
        M.extended += static_cast<int>(undo.size());
        return true;
      }
      for (auto it = moved.rbegin(); it != moved.rend(); ++it) {
        recode(it->first, report.codes[it->first], it->second);
        report.codes[it->first] = it->second;
      }
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) res.system.paths[it->first].vertices = std::move(it->second);
      return false;
    };
    for (const auto& members : colliding) {
      // Any member may be the one that stays.
      VertexSet stuck;
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (members.size() - k + stuck.size() <= 1) break;
        if (!hang(members[k])) stuck.push_back(members[k]);
      }
      for (std::size_t k = 1; k < stuck.size(); ++k) {
        res.system.add({stuck[k]});
        path_coord.push_back(-1);
        ++M.repairs;
      }
    }
    if (!verify_separation(g, res.system).separates)
      throw std::logic_error("separate_critical: repaired system does not separate");
  }

  // Core codes y: membership in the coordinate paths actually used.
  res.core_codes.assign(n, Bitstring(len));
  for (std::size_t pi = 0; pi < res.system.size(); ++pi)
    if (path_coord[pi] >= 0)
      for (Vertex v : res.system.paths[pi].vertices)
        if (g.degree(v) >= 2) res.core_codes[index[v]].set(path_coord[pi]);
  for (int i = 0; i < n; ++i) {
    const auto& y = res.core_codes[i].words();
    const auto& x = res.codes.vectors[i].words();
    for (std::size_t w = 0; w < y.size(); ++w)
      if (y[w] & ~x[w]) M.domination_ok = false;
  }
  const double cutoff = params.cutoff >= 0 ? params.cutoff : std::max(3.0, std::log(std::max(n, 3)) / 10);
  {
    std::vector<Bitstring> hi;
    for (int i = 0; i < n; ++i)
      if (g.degree(V[i]) >= cutoff && res.core_codes[i].hamming(res.codes.vectors[i]) * 2 <= C1)
        hi.push_back(res.core_codes[i]);
    M.high_degree_checked = static_cast<int>(hi.size());
    std::sort(hi.begin(), hi.end());
    M.high_degree_distinct = std::adjacent_find(hi.begin(), hi.end()) == hi.end();
  }
  M.bound = 2 * M.ell + M.X0 + (2 * M.X1 + 2) / 3;
  return res;
}

}  // namespace sepaths
