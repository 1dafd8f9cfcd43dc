#include <gtest/gtest.h>

#include <cmath>

#include "sepaths/errors.hpp"
#include "sepaths/randgen.hpp"
#include "test_util.hpp"

using namespace sepaths;
using namespace sepaths::testing;

TEST(Gnp, Extremes) {
  EXPECT_EQ(gnp(5, 0, 1).edge_count(), 0u);
  EXPECT_EQ(gnp(5, 0, 1).order(), 5);
  EXPECT_EQ(gnp(5, 1, 1), complete_graph(5));
}

TEST(Gnp, Deterministic) {
  EXPECT_EQ(gnp(500, 0.02, 42), gnp(500, 0.02, 42));
  EXPECT_NE(gnp(500, 0.02, 42), gnp(500, 0.02, 43));
}

TEST(Gnp, EdgeCountWithinFiveSigma) {
  const int n = 10000;
  const double p = 2.0 / n;
  const double pairs = n * (n - 1) / 2.0;
  const double mean = pairs * p, sigma = std::sqrt(pairs * p * (1 - p));
  double total = 0;
  for (int s = 0; s < 100; ++s) {
    const double m = static_cast<double>(gnp(n, p, 1000 + s).edge_count());
    EXPECT_LT(std::abs(m - mean), 5 * sigma);
    total += m;
  }
  EXPECT_LT(std::abs(total / 100 - mean), 5 * sigma / 10);
}

TEST(Regular, SmallCases) {
  Graph c5 = random_regular(5, 2, 3);
  EXPECT_EQ(c5.edge_count(), 5u);
  EXPECT_EQ(components(c5).size(), 1u);
  EXPECT_THROW(random_regular(5, 3, 1), InvalidInput);
  Graph g = random_regular(100, 3, 9);
  for (Vertex v : g.vertices()) EXPECT_EQ(g.degree(v), 3);
}

TEST(Regular, Deterministic) { EXPECT_EQ(random_regular(200, 6, 5), random_regular(200, 6, 5)); }

TEST(Rng, DerivedStreamsDiffer) {
  EXPECT_NE(derive_seed(1, {0}), derive_seed(1, {1}));
  EXPECT_NE(derive_seed(1, {0, 1}), derive_seed(1, {1, 0}));
  EXPECT_EQ(derive_seed(7, {3, 4}), derive_seed(7, {3, 4}));
}
