#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "sepaths/errors.hpp"
#include "sepaths/graph.hpp"
#include "sepaths/randgen.hpp"
#include "sepaths/rng.hpp"
#include "test_util.hpp"

using namespace sepaths;
using namespace sepaths::testing;

TEST(Graph, RejectsLoopsAndRepeats) {
  EXPECT_THROW(make(3, {{0, 0}}), InvalidInput);
  EXPECT_THROW(make(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(make(3, {{0, 3}}), InvalidInput);
  Edge dup[] = {{0, 1}, {1, 0}};
  EXPECT_EQ(Graph::from_edges_dedup(3, dup).edge_count(), 1u);
}

TEST(Graph, KCore) {
  EXPECT_EQ(k_core(cycle_graph(5), 2).order(), 5);
  EXPECT_EQ(k_core(path_graph(7), 2).order(), 0);
  EXPECT_EQ(k_core(star_graph(5), 2).order(), 0);
  Graph c5p = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
  Graph core = k_core(c5p, 2);
  EXPECT_EQ(core.vertices(), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(core.edge_count(), 5u);
}

TEST(Graph, LowDegreeSet) {
  EXPECT_EQ(low_degree_set(star_graph(3), 1), (VertexSet{1, 2, 3}));
  EXPECT_TRUE(low_degree_set(cycle_graph(4), 1).empty());
  EXPECT_EQ(low_degree_set(path_graph(4), 1), (VertexSet{0, 3}));
}

TEST(Graph, DFar) {
  Graph c20 = cycle_graph(20);
  for (Vertex v : c20.vertices()) EXPECT_TRUE(is_D_far(c20, v, 1));
  EXPECT_FALSE(is_D_far(path_graph(3), 1, 1));
  std::vector<Edge> e;
  for (int i = 0; i < 20; ++i) e.push_back({i, (i + 1) % 20});
  e.push_back({0, 20});
  Graph pend = make(21, e);
  EXPECT_TRUE(is_D_far(pend, 9, 1));
  EXPECT_FALSE(is_D_far(pend, 7, 1));
}

TEST(Graph, ShortStructures) {
  auto p3 = find_S_paths_cycles(path_graph(3), {0, 2});
  ASSERT_EQ(p3.paths.size(), 1u);
  EXPECT_EQ(p3.paths[0], (VertexPath{0, 1, 2}));
  EXPECT_TRUE(p3.cycles.empty());
  auto c3 = find_S_paths_cycles(cycle_graph(3), {0});
  EXPECT_TRUE(c3.paths.empty());
  EXPECT_EQ(c3.cycles.size(), 1u);
  auto p6 = find_S_paths_cycles(path_graph(6), {0, 5});
  EXPECT_TRUE(p6.paths.empty());
  EXPECT_TRUE(p6.cycles.empty());
}

TEST(Graph, ShortStructuresMatchEnumeration) {
  for (int s = 0; s < 30; ++s) {
    Graph g = gnp(8, 0.35, 900 + s);
    VertexSet S;
    for (Vertex v : g.vertices())
      if (v % 3 == 0) S.push_back(v);
    auto found = find_S_paths_cycles(g, S);
    // Pairs of S joined by a walk of at most 4 edges without repeated vertices.
    std::set<std::pair<Vertex, Vertex>> expect;
    std::function<void(VertexPath&)> dfs = [&](VertexPath& p) {
      if (p.size() > 1 && set_contains(S, p.back()) && p.front() < p.back()) expect.insert({p.front(), p.back()});
      if (p.size() == 5) return;
      for (Vertex w : g.neighbors(p.back()))
        if (std::find(p.begin(), p.end(), w) == p.end()) {
          p.push_back(w);
          dfs(p);
          p.pop_back();
        }
    };
    for (Vertex a : S) {
      VertexPath p{a};
      dfs(p);
    }
    std::set<std::pair<Vertex, Vertex>> got;
    for (const auto& p : found.paths) {
      EXPECT_LE(p.size(), 5u);
      EXPECT_TRUE(is_path_in(g, p));
      got.insert({std::min(p.front(), p.back()), std::max(p.front(), p.back())});
    }
    EXPECT_EQ(got, expect) << "seed " << s;
  }
}

TEST(Graph, Queries) {
  EXPECT_EQ(distance(cycle_graph(6), 0, 3), 3);
  Graph two = make(4, {{0, 1}, {2, 3}});
  auto comps = components(two);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].size(), 2u);
  EXPECT_EQ(comps[1].size(), 2u);
  Graph ind = induced(cycle_graph(5), {0, 1, 2});
  EXPECT_EQ(ind.order(), 3);
  EXPECT_EQ(ind.edge_count(), 2u);
  EXPECT_EQ(ind.id_space(), 5);
}

TEST(Graph, DistanceSymmetricAndTriangle) {
  Graph g = gnp(60, 0.08, 17);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Vertex a = static_cast<Vertex>(rng.below(60)), b = static_cast<Vertex>(rng.below(60)),
           c = static_cast<Vertex>(rng.below(60));
    int ab = distance(g, a, b), ba = distance(g, b, a), bc = distance(g, b, c), ac = distance(g, a, c);
    EXPECT_EQ(ab, ba);
    if (ab != kInfiniteDistance && bc != kInfiniteDistance) EXPECT_LE(ac, ab + bc);
  }
}

TEST(Graph, EdgeListRoundTrip) {
  Graph g = gnp(40, 0.1, 3);
  std::stringstream s;
  write_edge_list(s, g);
  EXPECT_EQ(read_edge_list(s), g);
  std::stringstream bad("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(bad), InvalidInput);
  std::stringstream commented("# c\n3 1\n# x\n0 2\n");
  EXPECT_EQ(read_edge_list(commented).edge_count(), 1u);
}
