#include "sepaths/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "sepaths/errors.hpp"

namespace sepaths {

Graph::Graph(int n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  present_.assign(n, 1);
  vertices_.resize(n);
  for (int i = 0; i < n; ++i) vertices_[i] = i;
  adj_.assign(n, {});
}

namespace {

Graph build(int n, std::span<const Edge> edges, bool dedup) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") out of range");
    if (e.u == e.v) throw InvalidInput("self-loop at " + std::to_string(e.u));
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = adj[v];
    std::sort(a.begin(), a.end());
    auto it = std::unique(a.begin(), a.end());
    if (it != a.end() && !dedup)
      throw InvalidInput("parallel edge at vertex " + std::to_string(v));
    a.erase(it, a.end());
  }
  VertexSet all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return Graph::from_adjacency(n, all, std::move(adj));
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) { return build(n, edges, false); }
Graph Graph::from_edges_dedup(int n, std::span<const Edge> edges) {
  return build(n, edges, true);
}

Graph Graph::from_adjacency(int id_space, const VertexSet& present,
                            std::vector<std::vector<Vertex>> adj) {
  Graph g;
  g.present_.assign(id_space, 0);
  for (Vertex v : present) g.present_[v] = 1;
  g.vertices_ = present;
  adj.resize(id_space);
  g.adj_ = std::move(adj);
  std::size_t deg_sum = 0;
  for (const auto& a : g.adj_) deg_sum += a.size();
  g.m_ = deg_sum / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex w = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u : vertices_)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

int Graph::min_degree() const {
  int d = vertices_.empty() ? 0 : std::numeric_limits<int>::max();
  for (Vertex v : vertices_) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v : vertices_) d = std::max(d, degree(v));
  return d;
}

void Graph::require(Vertex v) const {
  if (!contains(v)) throw InvalidInput("invalid vertex id " + std::to_string(v));
}

Graph induced(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.id_space(), 0);
  for (Vertex v : s) {
    g.require(v);
    in[v] = 1;
  }
  std::vector<std::vector<Vertex>> adj(g.id_space());
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (in[w]) adj[v].push_back(w);
  return Graph::from_adjacency(g.id_space(), s, std::move(adj));
}

Graph k_core(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  std::vector<int> deg(g.id_space(), 0);
  std::vector<char> alive(g.id_space(), 0);
  std::vector<Vertex> stack;
  for (Vertex v : g.vertices()) {
    alive[v] = 1;
    deg[v] = g.degree(v);
    if (deg[v] < k) {
      stack.push_back(v);
      alive[v] = 0;
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      if (--deg[w] < k) {
        alive[w] = 0;
        stack.push_back(w);
      }
    }
  }
  VertexSet keep;
  for (Vertex v : g.vertices())
    if (alive[v]) keep.push_back(v);
  return induced(g, keep);
}

VertexSet low_degree_set(const Graph& g, double D) {
  VertexSet out;
  for (Vertex v : g.vertices())
    if (g.degree(v) <= D) out.push_back(v);
  return out;
}

bool is_D_far(const Graph& g, Vertex v, double D) {
  g.require(v);
  auto dist = bfs_distances(g, v, kFarRadius);
  for (Vertex w : g.vertices())
    if (w != v && dist[w] != kInfiniteDistance && g.degree(w) <= D) return false;
  return true;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<char> seen(g.id_space(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s : g.vertices()) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet giant_component(const Graph& g) {
  VertexSet best;
  for (auto& c : components(g))
    if (c.size() > best.size()) best = std::move(c);
  return best;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, int max_depth) {
  std::vector<int> dist(g.id_space(), kInfiniteDistance);
  std::vector<Vertex> frontier;
  for (Vertex s : sources) {
    g.require(s);
    if (dist[s] != 0) {
      dist[s] = 0;
      frontier.push_back(s);
    }
  }
  std::vector<Vertex> next;
  for (int d = 1; d <= max_depth && !frontier.empty(); ++d) {
    next.clear();
    for (Vertex v : frontier)
      for (Vertex w : g.neighbors(v))
        if (dist[w] == kInfiniteDistance) {
          dist[w] = d;
          next.push_back(w);
        }
    frontier.swap(next);
    if (d == kInfiniteDistance - 1) break;
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src, int max_depth) {
  return bfs_distances(g, VertexSet{src}, max_depth);
}

int distance(const Graph& g, Vertex u, Vertex v) {
  g.require(u);
  g.require(v);
  if (u == v) return 0;
  return bfs_distances(g, u)[v];
}

VertexPath shortest_path(const Graph& g, Vertex u, Vertex v) {
  g.require(u);
  g.require(v);
  auto dv = bfs_distances(g, v);
  if (dv[u] == kInfiniteDistance) return {};
  VertexPath p{u};
  Vertex cur = u;
  while (cur != v) {
    for (Vertex w : g.neighbors(cur))
      if (dv[w] == dv[cur] - 1) {
        cur = w;
        break;
      }
    p.push_back(cur);
  }
  return p;
}

namespace {

// Lexicographically least shortest path using precomputed distances to the target.
VertexPath walk_down(const Graph& g, Vertex from, const std::unordered_map<Vertex, int>& dt) {
  VertexPath p{from};
  Vertex cur = from;
  int d = dt.at(cur);
  while (d > 0) {
    for (Vertex w : g.neighbors(cur)) {
      auto it = dt.find(w);
      if (it != dt.end() && it->second == d - 1) {
        cur = w;
        break;
      }
    }
    --d;
    p.push_back(cur);
  }
  return p;
}

std::unordered_map<Vertex, int> bounded_bfs(const Graph& g, Vertex s, int radius) {
  std::unordered_map<Vertex, int> dist{{s, 0}};
  std::vector<Vertex> frontier{s}, next;
  for (int d = 1; d <= radius && !frontier.empty(); ++d) {
    next.clear();
    for (Vertex v : frontier)
      for (Vertex w : g.neighbors(v))
        if (dist.emplace(w, d).second) next.push_back(w);
    frontier.swap(next);
  }
  return dist;
}

VertexPath canonical_cycle(VertexPath c) {
  auto mn = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), mn, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

}  // namespace

ShortStructures find_S_paths_cycles(const Graph& g, const VertexSet& S) {
  for (Vertex s : S) g.require(s);
  ShortStructures out;
  std::vector<char> inS(g.id_space(), 0);
  for (Vertex s : S) inS[s] = 1;
  std::vector<std::unordered_map<Vertex, int>> balls(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) balls[i] = bounded_bfs(g, S[i], kShortLength);
  std::unordered_map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < S.size(); ++i) index[S[i]] = i;
  for (std::size_t i = 0; i < S.size(); ++i) {
    std::vector<Vertex> targets;
    for (const auto& [w, d] : balls[i])
      if (d > 0 && inS[w] && w > S[i]) targets.push_back(w);
    std::sort(targets.begin(), targets.end());
    for (Vertex t : targets) out.paths.push_back(walk_down(g, S[i], balls[index[t]]));
  }
  std::set<VertexPath> cycles;
  for (Vertex s : S) {
    auto nb = g.neighbors(s);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex a = nb[i], b = nb[j];
        if (g.adjacent(a, b)) cycles.insert(canonical_cycle({s, a, b}));
        for (Vertex c : g.neighbors(a))
          if (c != s && c != b && g.adjacent(c, b)) cycles.insert(canonical_cycle({s, a, c, b}));
      }
  }
  out.cycles.assign(cycles.begin(), cycles.end());
  return out;
}

bool is_path_in(const Graph& g, std::span<const Vertex> path) {
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.contains(path[i]) || !seen.insert(path[i]).second) return false;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

bool is_hamilton_path(const Graph& g, std::span<const Vertex> path) {
  return static_cast<int>(path.size()) == g.order() && is_path_in(g, path);
}

bool is_hamilton_cycle(const Graph& g, std::span<const Vertex> cycle) {
  return g.order() >= 3 && is_hamilton_path(g, cycle) && g.adjacent(cycle.front(), cycle.back());
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw InvalidInput("line " + std::to_string(lineno) + ": expected two integers");
    std::string extra;
    if (ls >> extra) throw InvalidInput("line " + std::to_string(lineno) + ": trailing tokens");
    if (!have_header) {
      if (a < 0 || b < 0 || a > std::numeric_limits<Vertex>::max())
        throw InvalidInput("bad header");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw InvalidInput("line " + std::to_string(lineno) + ": vertex id out of range");
  }
  if (!have_header) throw InvalidInput("missing `n m` header");
  if (static_cast<long long>(edges.size()) != m)
    throw InvalidInput("header announces " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.id_space() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph load_edge_list(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file);
  return read_edge_list(in);
}

void save_edge_list(const std::string& file, const Graph& g) {
  std::ofstream out(file);
  if (!out) throw InvalidInput("cannot write " + file);
  write_edge_list(out, g);
}

VertexSet make_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool set_contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace sepaths
