#include <gtest/gtest.h>

#include <algorithm>

#include "sepaths/hamilton.hpp"
#include "sepaths/properties.hpp"
#include "sepaths/randgen.hpp"
#include "sepaths/rng.hpp"
#include "test_util.hpp"

using namespace sepaths;
using namespace sepaths::testing;

namespace {

bool spans(const Graph& g, VertexPath p) {
  std::sort(p.begin(), p.end());
  return p == g.vertices();
}

bool is_cycle_in(const Graph& g, const VertexPath& c) {
  return c.size() >= 3 && is_path_in(g, c) && g.adjacent(c.front(), c.back());
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return make(10, e);
}

}  // namespace

TEST(Hamilton, SmallCycles) {
  for (int n : {3, 5, 12, 40}) {
    Graph c = cycle_graph(n);
    auto r = hamilton_cycle(c, 1);
    ASSERT_TRUE(r.found()) << n;
    EXPECT_TRUE(spans(c, r.path));
    EXPECT_TRUE(is_cycle_in(c, r.path));
  }
}

TEST(Hamilton, PetersenHasNoCycle) {
  auto r = hamilton_cycle(petersen(), 1);
  EXPECT_EQ(r.status, HamiltonStatus::Impossible);
  EXPECT_FALSE(exact_hamilton_cycle(petersen()));
  EXPECT_TRUE(exact_hamilton_path(petersen()));
}

TEST(Hamilton, ObstructionsAreCertified) {
  EXPECT_TRUE(cycle_obstruction(path_graph(5)));
  EXPECT_TRUE(path_obstruction(star_graph(3)));
  EXPECT_FALSE(path_obstruction(path_graph(5)));
  EXPECT_EQ(hamilton_path(star_graph(4), 1).status, HamiltonStatus::Impossible);
  // A spider with three legs of length two.
  Graph spider = make(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  EXPECT_TRUE(path_obstruction(spider));
}

TEST(Hamilton, RandomDenseGraphs) {
  for (int s = 0; s < 10; ++s) {
    Graph g = gnp(200, 0.1, 100 + s);
    auto c = hamilton_cycle(g, s);
    ASSERT_TRUE(c.found()) << s;
    EXPECT_TRUE(spans(g, c.path));
    EXPECT_TRUE(is_cycle_in(g, c.path));
    auto p = hamilton_path(g, s);
    ASSERT_TRUE(p.found());
    EXPECT_TRUE(spans(g, p.path));
    EXPECT_TRUE(is_path_in(g, p.path));
  }
}

TEST(Hamilton, PathWithPendantLeaves) {
  // A cycle with pendants on adjacent vertices: the path must run between the leaves.
  std::vector<Edge> e;
  for (int i = 0; i < 30; ++i) e.push_back({i, (i + 1) % 30});
  e.push_back({0, 30});
  e.push_back({1, 31});
  Graph g = make(32, e);
  auto r = hamilton_path(g, 4);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(spans(g, r.path));
  EXPECT_TRUE(is_path_in(g, r.path));
  EXPECT_EQ(std::min(r.path.front(), r.path.back()), 30);
}

TEST(Hamilton, FixedEndpoints) {
  Graph g = gnp(60, 0.3, 7);
  auto r = hamilton_path_endpoints(g, 3, 41, 2);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(spans(g, r.path));
  EXPECT_TRUE(is_path_in(g, r.path));
  EXPECT_EQ(r.path.front(), 3);
  EXPECT_EQ(r.path.back(), 41);
}

TEST(Hamilton, Boosters) {
  Graph host = gnp(150, 0.2, 3);
  std::vector<Edge> keep;
  Rng rng(9);
  for (const Edge& e : host.edges())
    if (rng.bernoulli(0.3)) keep.push_back(e);
  Graph sparse = Graph::from_edges(host.id_space(), keep);
  auto r = booster_hamilton_cycle(host, sparse, 5, {});
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_cycle_in(host, r.path));
  EXPECT_TRUE(spans(host, r.path));
  for (const Edge& b : r.boosters) EXPECT_TRUE(host.adjacent(b.u, b.v));
}

TEST(Hamilton, PosaCheck) {
  EXPECT_TRUE(posa_check(complete_graph(6)));
  EXPECT_FALSE(posa_check(path_graph(6)));
}

TEST(Properties, ExpanderVerdicts) {
  auto k = expander_check(complete_graph(8), 1.0, 3);
  EXPECT_FALSE(k.violation);
  EXPECT_TRUE(k.certified);
  auto p = expander_check(path_graph(10), 2.0, 2);
  EXPECT_TRUE(p.violation);
  EXPECT_TRUE(p.certified);
  EXPECT_LT(outer_neighbors(path_graph(10), p.witness), 2 * static_cast<int>(p.witness.size()));
  EXPECT_EQ(outer_neighbors(star_graph(4), {0}), 4);
}

TEST(Properties, SmallComponents) {
  Graph two = make(10, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
  auto v = check_C3(two);
  EXPECT_FALSE(v.passed);
  EXPECT_EQ(v.witness, (VertexSet{0, 1, 2}));
  auto rep = check_structural_properties(cycle_graph(30), 1, {{"C3"}});
  EXPECT_TRUE(rep.passed("C3"));
}
