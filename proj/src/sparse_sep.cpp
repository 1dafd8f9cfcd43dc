#include "sepaths/sparse_sep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "sepaths/critical_sep.hpp"
#include "sepaths/errors.hpp"
#include "sepaths/properties.hpp"

namespace sepaths {

Graph sparsify(const Graph& g, double c_mark, double c_keep, RngSeed seed) {
  const int cap = c_mark <= 0 ? 0 : static_cast<int>(std::ceil(c_mark));
  std::vector<Edge> kept;
  for (Vertex v : g.vertices()) {
    auto nb = g.neighbors(v);
    const int k = std::min<int>(cap, nb.size());
    for (int i = 0; i < k; ++i) kept.push_back({std::min(v, nb[i]), std::max(v, nb[i])});
  }
  Rng rng(seed);
  if (c_keep > 0)
    for (const Edge& e : g.edges())
      if (rng.bernoulli(c_keep)) kept.push_back(e);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<std::vector<Vertex>> adj(g.id_space());
  for (const Edge& e : kept) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return Graph::from_adjacency(g.id_space(), g.vertices(), std::move(adj));
}

BSets compute_B_sets(const Graph& gp, const VertexSet& S, int y_cap, double density) {
  BSets b;
  const int N = gp.id_space();
  std::vector<char> in_b0(N, 0), in_s(N, 0);
  for (Vertex v : S) in_s[v] = 1;
  for (Vertex v : gp.vertices())
    if (gp.degree(v) <= 1) in_b0[v] = 1;
  auto st = find_S_paths_cycles(gp, S);
  for (const auto* list : {&st.paths, &st.cycles})
    for (const auto& p : *list)
      for (Vertex v : p) in_b0[v] = 1;
  for (Vertex v : gp.vertices())
    if (in_b0[v]) b.B0.push_back(v);

  // Greedy maximal B1.
  std::vector<char> in_core(N, 0);  // (B0 u W) \ S
  long long e = 0;
  for (Vertex v : b.B0)
    if (!in_s[v]) in_core[v] = 1;
  for (Vertex v : gp.vertices())
    if (in_core[v])
      for (Vertex w : gp.neighbors(v))
        if (in_core[w] && v < w) ++e;
  std::vector<int> gain(N, 0);
  for (Vertex v : gp.vertices())
    if (!in_b0[v] && !in_s[v])
      for (Vertex w : gp.neighbors(v)) gain[v] += in_core[w];
  std::vector<char> in_b1(N, 0);
  while (static_cast<int>(b.B1.size()) < y_cap) {
    Vertex best = -1;
    for (Vertex v : gp.vertices()) {
      if (in_b0[v] || in_s[v] || in_b1[v] || gain[v] < 1) continue;
      if (best < 0 || gain[v] > gain[best]) best = v;
    }
    if (best < 0) break;
    const double need = density * static_cast<double>(b.B1.size() + 1);
    if (static_cast<double>(e + gain[best]) < need) break;
    e += gain[best];
    in_b1[best] = 1;
    in_core[best] = 1;
    b.B1.push_back(best);
    for (Vertex w : gp.neighbors(best)) ++gain[w];
  }
  std::sort(b.B1.begin(), b.B1.end());
  std::vector<char> in_b2(N, 0);
  for (Vertex v : b.B1)
    for (Vertex w : gp.neighbors(v))
      if (in_s[w] && !in_b0[w]) in_b2[w] = 1;
  for (Vertex v : gp.vertices())
    if (in_b2[v]) b.B2.push_back(v);
  return b;
}

namespace {

struct FamilyBuilder {
  const Graph& g;
  const SparseParams& params;
  SparseMetrics& M;
  RngSeed seed;
  VertexSet nonS;  // V(H) \ S

  struct Found {
    VertexPath path;
    bool hamilton = false;
    int order = 0;
  };

  // Hamilton path on G[vt]. Outside strict mode the search runs on the 2-core
  // and pendant trees are attached at the ends where they reach; a path that
  // still misses vertices is returned with hamilton = false.
  Found search(const VertexSet& vt, RngSeed s) {
    const Graph h = induced(g, vt);
    const int order = h.order();
    if (path_obstruction(h)) {
#pragma omp atomic
      ++M.ham_impossible;
    }
    if (!params.strict && !params.split_on_failure) {
      const Graph core = k_core(h, 2);
      if (core.order() > 0 && core.order() < order) {
        auto rc = hamilton_path(core, s, params.ham);
        VertexPath p = rc.found() ? rc.path : rc.longest;
        attach_ends(h, p);
        const bool spans = static_cast<int>(p.size()) == order;
        return {std::move(p), spans, order};
      }
    }
    auto r = hamilton_path(h, s, params.ham);
    if (r.found()) return {r.path, true, order};
    if (r.longest.empty() && !params.strict && !params.split_on_failure)
      r.longest = longest_path(h, s, params.ham).longest;
    return {r.longest, false, order};
  }

  static void attach_ends(const Graph& h, VertexPath& p) {
    if (p.empty()) return;
    std::vector<char> on(h.id_space(), 0);
    for (Vertex v : p) on[v] = 1;
    for (int side = 0; side < 2; ++side) {
      for (;;) {
        Vertex pick = -1;
        int pick_free = 0;
        for (Vertex w : h.neighbors(p.back())) {
          if (on[w]) continue;
          int f = 0;
          for (Vertex x : h.neighbors(w)) f += !on[x];
          if (pick < 0 || f < pick_free) {
            pick = w;
            pick_free = f;
          }
        }
        if (pick < 0) break;
        on[pick] = 1;
        p.push_back(pick);
      }
      std::reverse(p.begin(), p.end());
    }
  }

  void trivial(const VertexSet& A, PathSystem& out) {
    for (Vertex v : A) out.add({v});
    M.trivial_members += static_cast<int>(A.size());
  }

  // Indexed family separating the members A: member k gets index k + 1, bit b
  // contributes the path on base u {members with bit b}. `own_base` excludes
  // A from the base (classes of step 4); otherwise the base is V(H) \ S and its
  // complement path is emitted by the caller.
  void build(const VertexSet& A, bool own_base, const std::string& step, std::uint64_t tag,
             PathSystem& out) {
    if (static_cast<int>(A.size()) <= params.singleton_max) {
      trivial(A, out);
      return;
    }
    const VertexSet base = own_base ? set_minus(nonS, A) : nonS;
    const int m = static_cast<int>(A.size());
    const int bits = std::bit_width(static_cast<unsigned>(m));
    const int jobs = bits + (own_base ? 1 : 0);
    std::vector<Found> found(jobs);
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < jobs; ++b) {
      VertexSet vt = base;
      if (b < bits) {
        VertexSet T;
        for (int k = 0; k < m; ++k)
          if (((k + 1) >> b) & 1) T.push_back(A[k]);
        vt = set_union(base, T);
      }
      found[b] = search(vt, derive_seed(seed, {tag, static_cast<std::uint64_t>(b)}));
    }
    M.ham_searches += jobs;
    int failed = -1;
    for (int b = 0; b < jobs; ++b)
      if (!found[b].hamilton) {
        ++M.ham_failures;
        if (failed < 0) failed = b;
      }
    if (failed < 0 || (!params.strict && !params.split_on_failure)) {
      for (int b = 0; b < jobs; ++b) {
        if (found[b].path.empty()) continue;
        if (!found[b].hamilton) {
          ++M.fallbacks;
          M.missed += found[b].order - static_cast<int>(found[b].path.size());
        }
        out.add(std::move(found[b].path));
      }
      return;
    }
    if (params.strict)
      throw StrategyFailure(step, "no Hamilton path for " +
                                      (failed < bits ? "bit " + std::to_string(failed) : std::string("complement")) +
                                      " (class of " + std::to_string(m) + ")");
    ++M.splits;
    VertexSet lo(A.begin(), A.begin() + m / 2), hi(A.begin() + m / 2, A.end());
    build(lo, own_base, step, splitmix64(tag * 2 + 1), out);
    build(hi, own_base, step, splitmix64(tag * 2 + 2), out);
  }
};

}  // namespace

SparseResult separate_sparse(const Graph& g, RngSeed seed, const SparseParams& params) {
  const int n = g.order();
  if (n < 1) throw InvalidInput("separate_sparse needs a nonempty graph");
  SparseResult res;
  SparseMetrics& M = res.metrics;
  SparsePlan& P = res.plan;
  if (auto c3 = check_C3(g); !c3.passed) throw StrategyFailure("C3", c3.detail);

  const double np = n > 0 ? 2.0 * static_cast<double>(g.edge_count()) / n : 0;
  M.np = np;
  M.c_mark = params.c_mark >= 0 ? params.c_mark : std::max(3.0, np / 10);
  M.c_keep = params.c_keep;
  M.s_threshold = params.s_threshold >= 0 ? params.s_threshold : std::max(1.0, np / 4);
  M.density = params.density >= 0 ? params.density : np / 20;
  M.y_cap = params.y_cap >= 0 ? params.y_cap : static_cast<int>(std::ceil(n * std::exp(-1.5 * np)));

  // Step 1.
  P.gprime = sparsify(g, M.c_mark, M.c_keep, derive_seed(seed, {1}));
  M.gprime_edges = static_cast<long long>(P.gprime.edge_count());
  P.S = low_degree_set(g, M.s_threshold);
  BSets bs = compute_B_sets(P.gprime, P.S, M.y_cap, M.density);
  P.B0 = bs.B0;
  P.B1 = bs.B1;
  P.B2 = bs.B2;
  const VertexSet B = set_union(set_union(P.B0, P.B1), P.B2);
  VertexSet hv = set_minus(g.vertices(), B);
  // Guard: H keeps the largest component of G[V(H)].
  VertexSet guard;
  {
    VertexSet big = giant_component(induced(g, hv));
    guard = set_minus(hv, big);
    hv = big;
  }
  P.H = induced(P.gprime, hv);
  M.S = static_cast<int>(P.S.size());
  M.B0 = static_cast<int>(P.B0.size());
  M.B1 = static_cast<int>(P.B1.size());
  M.B2 = static_cast<int>(P.B2.size());
  M.H = P.H.order();
  M.guard = static_cast<int>(guard.size());

  // Step 2.
  VertexSet leaves, isolated;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 0) isolated.push_back(v);
    if (g.degree(v) == 1) leaves.push_back(v);
  }
  M.X0 = static_cast<int>(isolated.size());
  M.X1 = static_cast<int>(leaves.size());
  for (Vertex v : set_union(set_union(set_minus(P.B0, leaves), P.B1), set_union(P.B2, guard)))
    P.F0.add({v});
  LeafTriplets lt = separate_leaves(g, leaves);
  P.F1 = lt.paths;
  M.giant_leaves = lt.giant;
  M.outside_leaves = lt.outside;

  FamilyBuilder fb{g, params, M, seed, set_minus(hv, P.S)};

  // Step 3.
  const VertexSet members = set_intersection(P.S, hv);
  if (static_cast<int>(members.size()) > params.singleton_max) {
    auto comp = fb.search(fb.nonS, derive_seed(seed, {3, 0}));
    ++M.ham_searches;
    if (!comp.hamilton) {
      ++M.ham_failures;
      if (params.strict) throw StrategyFailure("step 3", "no Hamilton path for the complement");
    }
    if (!comp.hamilton && params.split_on_failure) {
      fb.trivial(members, P.FS);
    } else {
      if (!comp.hamilton) {
        ++M.fallbacks;
        M.missed += comp.order - static_cast<int>(comp.path.size());
      }
      if (!comp.path.empty()) P.FS.add(std::move(comp.path));
      fb.build(members, false, "step 3", 3, P.FS);
    }
  } else {
    fb.trivial(members, P.FS);
  }

  // Step 4: greedy colouring of the square of G[V(H)] on V(H) \ S.
  {
    Graph K = induced(g, hv);
    const int N = g.id_space();
    std::vector<int> color(N, -1), mark(N + 1, -1);
    int colors = 0;
    for (Vertex v : fb.nonS) {
      for (Vertex w : K.neighbors(v)) {
        if (color[w] >= 0) mark[color[w]] = v;
        for (Vertex x : K.neighbors(w))
          if (x != v && color[x] >= 0) mark[color[x]] = v;
      }
      int c = 0;
      while (mark[c] == v) ++c;
      color[v] = c;
      colors = std::max(colors, c + 1);
    }
    M.colors = colors;
    std::vector<VertexSet> byc(colors);
    for (Vertex v : fb.nonS) byc[color[v]].push_back(v);
    const int total = static_cast<int>(fb.nonS.size());
    M.class_cap = colors > 0 ? (total + colors - 1) / colors : 0;
    for (auto& c : byc)
      for (std::size_t i = 0; i < c.size(); i += M.class_cap)
        P.classes.emplace_back(c.begin() + i, c.begin() + std::min(c.size(), i + M.class_cap));
    M.classes = static_cast<int>(P.classes.size());
    // Class property: members pairwise at distance at least 3 in H.
    std::vector<int> cls(N, -1);
    for (std::size_t i = 0; i < P.classes.size(); ++i)
      for (Vertex v : P.classes[i]) cls[v] = static_cast<int>(i);
    for (Vertex w : hv) {
      std::vector<int> seen;
      if (cls[w] >= 0) seen.push_back(cls[w]);
      for (Vertex x : P.H.neighbors(w))
        if (cls[x] >= 0) seen.push_back(cls[x]);
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::logic_error("separate_sparse: colour class with two vertices at distance below 3");
    }
    for (std::size_t i = 0; i < P.classes.size(); ++i)
      fb.build(P.classes[i], true, "step 4 class " + std::to_string(i + 1), 1000 + i, P.FU);
  }

  res.system = P.F0;
  res.system.append(P.F1);
  res.system.append(P.FS);
  res.system.append(P.FU);
  M.F0 = static_cast<int>(P.F0.size());
  M.F1 = static_cast<int>(P.F1.size());
  M.FS = static_cast<int>(P.FS.size());
  M.FU = static_cast<int>(P.FU.size());
  M.total = static_cast<int>(res.system.size());
  M.lower_bound_leaves = lower_bound_leaves(g);
  M.paper_total = (2.0 / 3 + params.delta) * n * np * std::exp(-np);
  auto rep = verify_separation(g, res.system);
  if (!rep.separates) {
    if (params.strict || params.split_on_failure)
      throw StrategyFailure("verify", "vertices " + std::to_string(rep.witness->first) + " and " +
                                          std::to_string(rep.witness->second) + " share a code");
    // Singletons for all but one member of every code class.
    std::map<Bitstring, VertexSet> byc;
    for (Vertex v : g.vertices()) byc[rep.codes[v]].push_back(v);
    for (auto& [code, members] : byc)
      for (std::size_t k = 1; k < members.size(); ++k) {
        res.system.add({members[k]});
        ++M.repairs;
      }
    M.total = static_cast<int>(res.system.size());
    if (!verify_separation(g, res.system).separates)
      throw std::logic_error("separate_sparse: repaired system does not separate");
  }
  return res;
}

}  // namespace sepaths
