#include "sepaths/randgen.hpp"

#include <cmath>
#include <unordered_set>

#include "sepaths/errors.hpp"

namespace sepaths {

Graph gnp(int n, double p, RngSeed seed) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p must lie in [0,1]");
  std::vector<Edge> edges;
  if (p > 0.0 && n > 1) {
    Rng rng(seed);
    if (p >= 1.0) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    } else {
      // Walk the pairs (v,w), w < v, in row order skipping geometric gaps.
      const double lq = std::log1p(-p);
      long long v = 1, w = -1;
      while (v < n) {
        double r = 1.0 - rng.uniform();
        w += 1 + static_cast<long long>(std::floor(std::log(r) / lq));
        while (w >= v && v < n) {
          w -= v;
          ++v;
        }
        if (v < n) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_regular(int n, int d, RngSeed seed, int max_restarts) {
  if (n <= 0 || d < 0) throw InvalidInput("n must be positive, d nonnegative");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw InvalidInput("n*d must be even");
  if (d >= n) throw InvalidInput("d must be smaller than n");
  Rng rng(seed);
  auto key = [n](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n + b;
  };
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (Vertex v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) stubs.push_back(v);
    std::unordered_set<std::uint64_t> used;
    std::vector<Edge> edges;
    bool stuck = false;
    while (!stubs.empty()) {
      bool placed = false;
      // Random attempts first, then an exhaustive scan before declaring a dead end.
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        std::size_t i = rng.below(stubs.size()), j = rng.below(stubs.size());
        if (i == j) continue;
        Vertex a = stubs[i], b = stubs[j];
        if (a == b || used.count(key(a, b))) continue;
        used.insert(key(a, b));
        edges.push_back({a, b});
        if (i < j) std::swap(i, j);
        stubs[i] = stubs.back();
        stubs.pop_back();
        stubs[j] = stubs.back();
        stubs.pop_back();
        placed = true;
      }
      if (placed) continue;
      std::size_t i = rng.below(stubs.size());
      for (std::size_t j = 0; j < stubs.size() && !placed; ++j) {
        Vertex a = stubs[i], b = stubs[j];
        if (a == b || used.count(key(a, b))) continue;
        used.insert(key(a, b));
        edges.push_back({a, b});
        std::size_t hi = std::max(i, j), lo = std::min(i, j);
        stubs[hi] = stubs.back();
        stubs.pop_back();
        stubs[lo] = stubs.back();
        stubs.pop_back();
        placed = true;
      }
      if (!placed) {
        stuck = true;
        break;
      }
    }
    if (!stuck) return Graph::from_edges(n, edges);
  }
  throw BudgetExhausted("random_regular: pairing kept getting stuck");
}

}  // namespace sepaths
