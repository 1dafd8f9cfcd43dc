#include <gtest/gtest.h>

#include <sstream>

#include "sepaths/errors.hpp"
#include "sepaths/kernels.hpp"
#include "sepaths/path_system.hpp"
#include "sepaths/randgen.hpp"
#include "sepaths/rng.hpp"
#include "test_util.hpp"

using namespace sepaths;
using namespace sepaths::testing;

namespace {

PathSystem sys_of(std::vector<VertexPath> paths) {
  PathSystem s;
  for (auto& p : paths) s.add(p);
  return s;
}

}  // namespace

TEST(Verify, TriangleCodes) {
  Graph k3 = complete_graph(3);
  auto rep = verify_separation(k3, sys_of({{0, 1}, {1, 2}}));
  EXPECT_TRUE(rep.separates);
  EXPECT_EQ(rep.codes[0].to_string(), "10");
  EXPECT_EQ(rep.codes[1].to_string(), "11");
  EXPECT_EQ(rep.codes[2].to_string(), "01");
}

TEST(Verify, EmptySystemWitness) {
  auto rep = verify_separation(path_graph(4), {});
  EXPECT_FALSE(rep.separates);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(*rep.witness, (std::pair<Vertex, Vertex>{0, 1}));
}

TEST(Verify, SinglePathOnP3) {
  EXPECT_FALSE(verify_separation(path_graph(3), sys_of({{0, 1, 2}})).separates);
}

TEST(Verify, MalformedPaths) {
  Graph p4 = path_graph(4);
  EXPECT_THROW(validate_paths(p4, sys_of({{0, 2}})), InvalidPath);
  EXPECT_THROW(validate_paths(p4, sys_of({{0, 1, 0}})), InvalidPath);
  EXPECT_THROW(validate_paths(p4, sys_of({{7}})), InvalidPath);
  PathSystem closed;
  closed.add({0, 1, 2}, true);
  EXPECT_THROW(validate_paths(p4, closed), InvalidPath);
}

TEST(Bounds, Log) {
  EXPECT_EQ(lower_bound_log(1024), 10);
  EXPECT_EQ(lower_bound_log(1), 0);
  EXPECT_EQ(lower_bound_log(1000), 10);
  EXPECT_EQ(lower_bound_log(1025), 11);
}

TEST(Bounds, Leaves) {
  EXPECT_EQ(lower_bound_leaves(star_graph(4)), 2);
  EXPECT_EQ(lower_bound_leaves(cycle_graph(6)), 0);
  EXPECT_EQ(lower_bound_leaves(path_graph(3)), 1);
}

// Frozen values from exhaustive search.
TEST(Oracle, FrozenValues) {
  struct Case {
    const char* name;
    Graph g;
    int sp;
  };
  std::vector<Case> cases = {
      {"K1", Graph(1), 0},          {"K2", complete_graph(2), 1}, {"P3", path_graph(3), 2},
      {"K3", complete_graph(3), 2}, {"P4", path_graph(4), 2},     {"C4", cycle_graph(4), 2},
      {"K4", complete_graph(4), 2}, {"K13", star_graph(3), 2},    {"K14", star_graph(4), 3},
      {"C5", cycle_graph(5), 3},    {"P5", path_graph(5), 3},     {"K15", star_graph(5), 3},
      {"C6", cycle_graph(6), 3},    {"P6", path_graph(6), 3},     {"K17", star_graph(7), 4},
      {"E3", Graph(3), 2},
  };
  for (auto& c : cases) {
    auto r = exact_sp(c.g);
    EXPECT_EQ(r.size, c.sp) << c.name;
    EXPECT_TRUE(verify_separation(c.g, r.witness).separates) << c.name;
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.size) << c.name;
  }
}

TEST(Oracle, Limits) {
  EXPECT_THROW(exact_sp(path_graph(9)), InvalidInput);
  OracleLimits tiny;
  tiny.max_nodes = 1;
  EXPECT_THROW(exact_sp(complete_graph(6), tiny), BudgetExhausted);
}

TEST(PathSystemIo, RoundTrip) {
  PathSystem s;
  s.add({0, 1, 2}, true);
  s.add({3});
  std::stringstream io;
  write_path_system(io, s);
  EXPECT_EQ(read_path_system(io), s);
  std::stringstream bad("0 x 2\n");
  EXPECT_THROW(read_path_system(bad), InvalidInput);
}

TEST(Kernels, SerialMatchesParallel) {
  Graph g = gnp(300, 0.05, 8);
  Rng rng(2);
  std::vector<VertexPath> sets;
  for (int j = 0; j < 40; ++j) {
    VertexPath p;
    for (Vertex v : g.vertices())
      if (rng.coin()) p.push_back(v);
    sets.push_back(p);
  }
  auto a = membership_codes_serial(g.id_space(), sets);
  auto b = membership_codes_parallel(g.id_space(), sets);
  EXPECT_EQ(a, b);
  for (int r : {0, 5, 12}) EXPECT_EQ(hamming_close_serial(a, r), hamming_close_parallel(a, r));
  EXPECT_EQ(min_pairwise_hamming_serial(a), min_pairwise_hamming_parallel(a));
}

TEST(Kernels, Collision) {
  std::vector<Bitstring> codes = {Bitstring::parse("10"), Bitstring::parse("01"), Bitstring::parse("10")};
  auto c = first_collision({0, 1, 2}, codes);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (std::pair<Vertex, Vertex>{0, 2}));
}
