#include <gtest/gtest.h>

#include <cmath>

#include "sepaths/errors.hpp"
#include "sepaths/extremal.hpp"
#include "sepaths/faultmon.hpp"
#include "test_util.hpp"

using namespace sepaths;
using namespace sepaths::testing;

TEST(Gadget, SixtyVertices) {
  Gadget gad = build_gadget(60);
  EXPECT_EQ(gad.g.edge_count(), 112u);
  EXPECT_EQ(gad.k, 27);
  EXPECT_EQ(gad.l, 27);
  EXPECT_EQ(gad.fe.size(), 33u);
  EXPECT_FALSE(gad.g.adjacent(gad.e.u, gad.e.v));
  EXPECT_TRUE(gad.g_e.adjacent(gad.e.u, gad.e.v));
  EXPECT_TRUE(verify_separation(gad.g_e, gad.fe).separates);
  EXPECT_EQ(gadget_lower_bound(gad), 36);
}

TEST(Gadget, OddOrder) {
  Gadget gad = build_gadget(61);
  EXPECT_EQ(gad.l, gad.k + 1);
  EXPECT_EQ(gad.fe.size(), static_cast<std::size_t>(gad.k + 7));
  EXPECT_EQ(gadget_lower_bound(67), 40);
  EXPECT_THROW(build_gadget(59), InvalidInput);
}

TEST(Gadget, GapGrowsWithOrder) {
  for (int n = 60; n <= 200; n += 7) {
    Gadget gad = build_gadget(n);
    const int gap = gadget_lower_bound(gad) - static_cast<int>(gad.fe.size());
    EXPECT_GE(gap, n / 6.0 - 10) << n;
    EXPECT_EQ(gad.g.edge_count(), static_cast<std::size_t>(2 * n - 8));
  }
}

TEST(MinDegree, CompleteGraph) {
  Graph k = complete_graph(16);
  MinDegreeParams p;
  p.override_threshold = true;
  auto r = separate_min_degree(k, 3, p);
  EXPECT_EQ(r.system.size(), 4u);
  EXPECT_TRUE(verify_separation(k, r.system).separates);
  for (const auto& path : r.system.paths) EXPECT_TRUE(path.closed);
}

TEST(MinDegree, ThresholdGuard) {
  EXPECT_THROW(separate_min_degree(cycle_graph(20), 1), PreconditionViolation);
  EXPECT_GT(min_degree_threshold(256), 128);
}

namespace {

PathSystem k3_system() {
  PathSystem s;
  s.add({0, 1});
  s.add({1, 2});
  return s;
}

}  // namespace

TEST(Monitor, TriangleTable) {
  Graph k3 = complete_graph(3);
  CodeTable t = build_code_table(k3, k3_system());
  EXPECT_EQ(t.paths, 2);
  EXPECT_EQ(t.codes[0].to_string(), "10");
  EXPECT_EQ(t.codes[1].to_string(), "11");
  EXPECT_EQ(t.codes[2].to_string(), "01");
  EXPECT_EQ(t.index.size(), 3u);
  EXPECT_FALSE(t.uncovered);
}

TEST(Monitor, ProbeAndDecode) {
  Graph k3 = complete_graph(3);
  auto sys = k3_system();
  CodeTable t = build_code_table(k3, sys);
  EXPECT_EQ(simulate_probe(k3, sys, 1).to_string(), "11");
  EXPECT_EQ(simulate_probe(k3, sys, std::nullopt).to_string(), "00");
  auto a = decode(t, Bitstring::parse("10"));
  EXPECT_EQ(a.kind, DecodeKind::Vertex);
  EXPECT_EQ(a.vertex, 0);
  EXPECT_EQ(decode(t, Bitstring::parse("00")).kind, DecodeKind::NoFailure);
  // Two failures OR their rows together; the single-failure model reads b.
  auto both = decode(t, Bitstring::parse("11"));
  EXPECT_EQ(both.kind, DecodeKind::Vertex);
  EXPECT_EQ(both.vertex, 1);
  EXPECT_THROW(decode(t, Bitstring::parse("101")), InvalidInput);
}

TEST(Monitor, UncoveredVertex) {
  Graph p3 = path_graph(3);
  PathSystem s;
  s.add({0, 1});
  s.add({1});
  CodeTable t = build_code_table(p3, s);
  ASSERT_TRUE(t.uncovered);
  EXPECT_EQ(*t.uncovered, 2);
  auto d = decode(t, simulate_probe(p3, s, 2));
  EXPECT_EQ(d.kind, DecodeKind::NoFailure);
  ASSERT_TRUE(d.uncovered);
  EXPECT_EQ(*d.uncovered, 2);
}

TEST(Monitor, RejectsNonSeparating) {
  EXPECT_THROW(build_code_table(path_graph(3), {}), InvalidInput);
}

TEST(Monitor, UnknownSyndromeIsAmbiguous) {
  Graph p4 = path_graph(4);
  PathSystem s;
  s.add({0, 1});
  s.add({1, 2});
  s.add({3});
  CodeTable t = build_code_table(p4, s);
  EXPECT_EQ(decode(t, Bitstring::parse("101")).kind, DecodeKind::Ambiguous);
}
