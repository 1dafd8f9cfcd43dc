#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepaths {

using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;   // strictly increasing
using VertexPath = std::vector<Vertex>;  // consecutive entries adjacent

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

// Undirected simple graph over the id space 0..id_space()-1. Only the present
// vertices belong to the graph; induced subgraphs and cores keep original ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws InvalidInput on loops, out-of-range ids and repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges);
  // Like from_edges but silently drops repeated edges.
  static Graph from_edges_dedup(int n, std::span<const Edge> edges);
  // Adjacency lists must be sorted, symmetric and supported on `present`.
  static Graph from_adjacency(int id_space, const VertexSet& present,
                              std::vector<std::vector<Vertex>> adj);

  int id_space() const { return static_cast<int>(adj_.size()); }
  int order() const { return static_cast<int>(vertices_.size()); }
  const VertexSet& vertices() const { return vertices_; }
  bool contains(Vertex v) const {
    return v >= 0 && v < id_space() && present_[v] != 0;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t edge_count() const { return m_; }
  std::vector<Edge> edges() const;
  int min_degree() const;
  int max_degree() const;

  // Throws InvalidInput unless v is a present vertex.
  void require(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.present_ == b.present_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<char> present_;
  VertexSet vertices_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

Graph induced(const Graph& g, const VertexSet& s);
Graph k_core(const Graph& g, int k);
VertexSet low_degree_set(const Graph& g, double D);
bool is_D_far(const Graph& g, Vertex v, double D);
inline constexpr int kFarRadius = 8;

std::vector<VertexSet> components(const Graph& g);
// Largest component, ties broken by smallest minimum vertex.
VertexSet giant_component(const Graph& g);
int distance(const Graph& g, Vertex u, Vertex v);
// Distances from src over the id space; kInfiniteDistance where unreached or beyond max_depth.
std::vector<int> bfs_distances(const Graph& g, Vertex src, int max_depth = kInfiniteDistance);
// Multi-source variant.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               int max_depth = kInfiniteDistance);
// Lexicographically least shortest path, empty if unreachable.
VertexPath shortest_path(const Graph& g, Vertex u, Vertex v);

struct ShortStructures {
  std::vector<VertexPath> paths;   // endpoints in S, at most 4 edges
  std::vector<VertexPath> cycles;  // at most 4 edges, meets S; first vertex not repeated
};
inline constexpr int kShortLength = 4;
ShortStructures find_S_paths_cycles(const Graph& g, const VertexSet& S);

bool is_path_in(const Graph& g, std::span<const Vertex> path);
bool is_hamilton_cycle(const Graph& g, std::span<const Vertex> cycle);
bool is_hamilton_path(const Graph& g, std::span<const Vertex> path);

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::string& file);
void save_edge_list(const std::string& file, const Graph& g);

VertexSet make_set(std::vector<Vertex> v);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);

}  // namespace sepaths
