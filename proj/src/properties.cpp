#include "sepaths/properties.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace sepaths {

int outer_neighbors(const Graph& g, const VertexSet& s) {
  std::set<Vertex> out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!set_contains(s, w)) out.insert(w);
  return static_cast<int>(out.size());
}

namespace {

std::vector<Vertex> square_neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex a : g.neighbors(v)) {
    out.push_back(a);
    for (Vertex b : g.neighbors(a))
      if (b != v) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet random_connected_set(const Graph& g, int size, Rng& rng) {
  const auto& vs = g.vertices();
  VertexSet s{vs[rng.below(vs.size())]};
  std::vector<Vertex> frontier;
  for (Vertex w : g.neighbors(s[0])) frontier.push_back(w);
  while (static_cast<int>(s.size()) < size && !frontier.empty()) {
    std::size_t i = rng.below(frontier.size());
    Vertex v = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    if (set_contains(s, v)) continue;
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    for (Vertex w : g.neighbors(v))
      if (!set_contains(s, w)) frontier.push_back(w);
  }
  return s;
}

VertexSet random_set(const Graph& g, int size, Rng& rng) {
  std::vector<Vertex> vs = g.vertices();
  for (int i = 0; i < size && i < static_cast<int>(vs.size()); ++i)
    std::swap(vs[i], vs[i + rng.below(vs.size() - i)]);
  vs.resize(std::min<std::size_t>(size, vs.size()));
  return make_set(vs);
}

PropertyVerdict verdict(const std::string& name, bool exact, bool passed = true,
                        const std::string& detail = "") {
  PropertyVerdict v;
  v.name = name;
  v.exact = exact;
  v.passed = passed;
  v.detail = detail;
  return v;
}

std::size_t spanned_edges(const Graph& g, const VertexSet& s) {
  std::size_t e = 0;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (v < w && set_contains(s, w)) ++e;
  return e;
}

}  // namespace

ExpanderVerdict expander_check(const Graph& g, double alpha, int N, const ExpanderOptions& opt) {
  ExpanderVerdict r;
  auto violates = [&](const VertexSet& s) {
    int nb = outer_neighbors(g, s);
    if (nb < alpha * static_cast<double>(s.size())) {
      r.violation = true;
      r.certified = true;
      r.witness = s;
      r.witness_neighbors = nb;
      r.label = "certified-failure";
      return true;
    }
    return false;
  };
  // Sets disconnected in G^2 split into parts with disjoint outer neighbourhoods,
  // so a violating set has a violating G^2-connected part.
  const int cap = std::min(opt.exhaustive_cap, N);
  std::vector<std::vector<Vertex>> sq(g.id_space());
  for (Vertex v : g.vertices()) sq[v] = square_neighbors(g, v);
  std::set<VertexSet> level;
  for (Vertex v : g.vertices()) {
    if (cap < 1) break;
    if (violates({v})) return r;
    level.insert({v});
  }
  for (int size = 2; size <= cap; ++size) {
    std::set<VertexSet> next;
    for (const auto& s : level)
      for (Vertex v : s)
        for (Vertex w : sq[v]) {
          if (w < s.front() || set_contains(s, w)) continue;
          VertexSet t = s;
          t.insert(std::lower_bound(t.begin(), t.end(), w), w);
          if (next.insert(t).second && violates(t)) return r;
        }
    level.swap(next);
  }
  if (N <= cap || g.order() <= cap) {
    r.certified = true;
    r.label = "exhaustive-pass";
    return r;
  }
  Rng rng(opt.seed);
  const int top = std::min(N, g.order());
  for (int i = 0; i < opt.samples; ++i) {
    int size = cap + 1 + static_cast<int>(rng.below(top - cap));
    if (violates(random_connected_set(g, size, rng))) return r;
  }
  r.label = "no-violation-found (heuristic)";
  return r;
}

const PropertyVerdict* PropertyReport::find(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

bool PropertyReport::passed(const std::string& name) const {
  const auto* v = find(name);
  return v && v->passed;
}

PropertyVerdict check_C1(const Graph& g, double D, int span) {
  PropertyVerdict r = verdict("C1", true);
  VertexSet S = low_degree_set(g, D);
  struct Label {
    Vertex src;
    int dist;
  };
  std::vector<std::vector<Label>> labels(g.id_space());
  std::deque<std::pair<Vertex, Label>> queue;
  for (Vertex s : S) {
    labels[s].push_back({s, 0});
    queue.push_back({s, {s, 0}});
  }
  while (!queue.empty()) {
    auto [v, lab] = queue.front();
    queue.pop_front();
    if (lab.dist + 1 >= span) continue;
    for (Vertex w : g.neighbors(v)) {
      auto& lw = labels[w];
      if (lw.size() >= 3) continue;
      bool have = false;
      for (const auto& l : lw) have |= l.src == lab.src;
      if (have) continue;
      lw.push_back({lab.src, lab.dist + 1});
      queue.push_back({w, lw.back()});
    }
  }
  int best = kInfiniteDistance;
  for (Vertex m : g.vertices()) {
    const auto& l = labels[m];
    if (l.size() < 3) continue;
    int size = l[0].dist + l[1].dist + l[2].dist + 1;
    if (size <= span && size < best) {
      best = size;
      r.witness = make_set({m, l[0].src, l[1].src, l[2].src});
    }
  }
  if (best != kInfiniteDistance) {
    r.passed = false;
    r.detail = "three low-degree vertices in a connected set of " + std::to_string(best) + " vertices";
  }
  return r;
}

PropertyVerdict check_C2(const Graph& g, double D, int span) {
  PropertyVerdict r = verdict("C2", true);
  VertexSet S = low_degree_set(g, D);
  if (S.empty()) return r;
  auto near = bfs_distances(g, S, std::max(0, span - 3));
  int best = kInfiniteDistance;
  Vertex best_r = -1;
  std::vector<int> dist(g.id_space(), -1), branch(g.id_space(), -1);
  std::vector<Vertex> touched;
  for (Vertex root : g.vertices()) {
    if (near[root] == kInfiniteDistance) continue;
    int budget = span - near[root];
    if (budget < 3) continue;
    // Shortest cycle through root, limited to `budget` vertices.
    for (Vertex t : touched) dist[t] = branch[t] = -1;
    touched.clear();
    dist[root] = 0;
    touched.push_back(root);
    std::deque<Vertex> q;
    for (Vertex w : g.neighbors(root)) {
      dist[w] = 1;
      branch[w] = w;
      touched.push_back(w);
      q.push_back(w);
    }
    int cyc = kInfiniteDistance;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      if (2 * dist[u] + 1 > budget || 2 * dist[u] + 1 >= cyc) break;
      for (Vertex w : g.neighbors(u)) {
        if (w == root) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          branch[w] = branch[u];
          touched.push_back(w);
          q.push_back(w);
        } else if (branch[w] != branch[u]) {
          cyc = std::min(cyc, dist[u] + dist[w] + 1);
        }
      }
    }
    if (cyc != kInfiniteDistance && cyc + near[root] <= span && cyc + near[root] < best) {
      best = cyc + near[root];
      best_r = root;
    }
  }
  if (best_r >= 0) {
    r.passed = false;
    r.witness = {best_r};
    r.detail = "cycle within " + std::to_string(best) + " vertices of a low-degree vertex";
  }
  return r;
}

PropertyVerdict check_C3(const Graph& g) {
  PropertyVerdict r = verdict("C3", true);
  const int n = g.order();
  for (const auto& c : components(g)) {
    int k = static_cast<int>(c.size());
    if (k >= 3 && 2 * k <= n) {
      r.passed = false;
      r.witness = c;
      r.detail = "component of size " + std::to_string(k);
      return r;
    }
  }
  return r;
}

PropertyVerdict check_C6(const Graph& g, int samples, RngSeed seed) {
  PropertyVerdict r = verdict("C6", false);
  const int n = g.order();
  if (n < 3) return r;
  const double ln = std::log(static_cast<double>(n));
  const int cap = std::max(1, static_cast<int>(n / std::sqrt(ln)));
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    int size = 1 + static_cast<int>(rng.below(cap));
    VertexSet x = (i % 2) ? random_connected_set(g, size, rng) : random_set(g, size, rng);
    ++r.samples;
    if (spanned_edges(g, x) > std::pow(ln, 0.75) * static_cast<double>(x.size())) {
      r.passed = false;
      r.witness = x;
      r.detail = "dense set found";
      return r;
    }
  }
  return r;
}

PropertyVerdict check_C7(const Graph& g, double D, int samples, RngSeed seed) {
  PropertyVerdict r = verdict("C7", false);
  const int n = g.order();
  if (n < 3) return r;
  const double ln = std::log(static_cast<double>(n));
  const int cap = std::max(1, std::min(200, static_cast<int>(n / std::sqrt(ln))));
  Rng rng(seed);
  std::vector<int> hits(g.id_space(), 0);
  for (int i = 0; i < samples; ++i) {
    VertexSet x = random_connected_set(g, 1 + static_cast<int>(rng.below(cap)), rng);
    std::vector<Vertex> touched;
    for (Vertex v : x)
      for (Vertex w : g.neighbors(v))
        if (!set_contains(x, w)) {
          if (hits[w]++ == 0) touched.push_back(w);
        }
    std::sort(touched.begin(), touched.end(), [&](Vertex a, Vertex b) { return hits[a] > hits[b]; });
    std::size_t ycap = static_cast<std::size_t>(std::pow(ln, 0.25) * static_cast<double>(x.size()));
    long long e = 0;
    for (std::size_t k = 0; k < touched.size() && k < ycap; ++k) e += hits[touched[k]];
    for (Vertex w : touched) hits[w] = 0;
    ++r.samples;
    if (e > D * static_cast<double>(x.size()) / 2.0) {
      r.passed = false;
      r.witness = x;
      r.detail = "X with " + std::to_string(e) + " edges into its best Y";
      return r;
    }
  }
  return r;
}

PropertyVerdict check_C8(const Graph& g, int samples, RngSeed seed) {
  PropertyVerdict r = verdict("C8", false);
  const int n = g.order();
  if (n < 3) return r;
  const int size = static_cast<int>(std::ceil(n / std::sqrt(std::log(static_cast<double>(n)))));
  if (2 * size > n) {
    r.detail = "sets of the required size cannot be disjoint";
    return r;
  }
  Rng rng(seed);
  std::vector<char> side(g.id_space(), 0);
  for (int i = 0; i < samples; ++i) {
    VertexSet xy = random_set(g, 2 * size, rng);
    rng.shuffle(xy);
    for (int k = 0; k < 2 * size; ++k) side[xy[k]] = k < size ? 1 : 2;
    long long e = 0;
    for (int k = 0; k < size; ++k)
      for (Vertex w : g.neighbors(xy[k]))
        if (side[w] == 2) ++e;
    for (Vertex v : xy) side[v] = 0;
    ++r.samples;
    if (e < n / 6.0) {
      r.passed = false;
      r.detail = "disjoint pair with " + std::to_string(e) + " edges between";
      return r;
    }
  }
  return r;
}

PropertyVerdict check_B2(const Graph& g) {
  PropertyVerdict r = verdict("B2", true);
  const int n = g.order();
  if (n < 2) return r;
  const double thr = std::log(static_cast<double>(n)) / 10.0;
  for (Vertex u : g.vertices()) {
    if (g.degree(u) >= thr) continue;
    auto d = bfs_distances(g, u, 10);
    for (Vertex v : g.vertices())
      if (v != u && d[v] != kInfiniteDistance && g.degree(u) + g.degree(v) < thr) {
        r.passed = false;
        r.witness = make_set({u, v});
        r.detail = "close pair with degree sum below ln n/10";
        return r;
      }
  }
  return r;
}

PropertyReport check_structural_properties(const Graph& g, double D, const PropertyOptions& opt) {
  PropertyReport rep;
  for (const auto& w : opt.which) {
    if (w == "C1")
      rep.verdicts.push_back(check_C1(g, D, opt.span));
    else if (w == "C2")
      rep.verdicts.push_back(check_C2(g, D, opt.span));
    else if (w == "C3")
      rep.verdicts.push_back(check_C3(g));
    else if (w == "C6")
      rep.verdicts.push_back(check_C6(g, opt.samples, opt.seed));
    else if (w == "C7")
      rep.verdicts.push_back(check_C7(g, D, opt.samples, opt.seed));
    else if (w == "C8")
      rep.verdicts.push_back(check_C8(g, opt.samples, opt.seed));
    else if (w == "B2")
      rep.verdicts.push_back(check_B2(g));
    else
      rep.verdicts.push_back(verdict(w, true, false, "unknown property"));
  }
  return rep;
}

}  // namespace sepaths
