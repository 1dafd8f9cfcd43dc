#include "sepaths/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sepaths/errors.hpp"

namespace sepaths {

Gadget build_gadget(int n) {
  if (n < 60) throw InvalidInput("gadget needs n >= 60");
  Gadget gad;
  gad.n = n;
  gad.k = (n - 6) / 2;
  gad.l = n - 6 - gad.k;
  const int k = gad.k, l = gad.l;
  for (int q = 2; q <= k - 2; ++q)
    if (std::gcd(q, k) == 1) {
      gad.q = q;
      break;
    }
  if (gad.q == 0) throw std::logic_error("gadget: no q coprime to k");
  const Vertex u1 = 0, v1 = 1, w1 = 2, u2 = 3, v2 = 4, w2 = 5;
  auto x = [&](long long i) { return static_cast<Vertex>(5 + ((i - 1) % k + k) % k + 1); };
  auto y = [&](long long i) { return static_cast<Vertex>(5 + k + ((i - 1) % k + k) % k + 1); };
  std::vector<Edge> edges = {{u1, v1}, {u1, w1}, {u2, v2}, {u2, w2}};
  for (int i = 1; i <= k; ++i) {
    edges.push_back({v1, x(i)});
    edges.push_back({w1, x(i)});
  }
  for (int i = 1; i <= l; ++i) {
    Vertex yi = static_cast<Vertex>(5 + k + i);
    edges.push_back({v2, yi});
    edges.push_back({w2, yi});
  }
  gad.g = Graph::from_edges(n, edges);
  if (static_cast<long long>(gad.g.edge_count()) != 2LL * n - 8) throw std::logic_error("gadget: edge count");
  gad.e = {u1, u2};
  edges.push_back(gad.e);
  gad.g_e = Graph::from_edges(n, edges);

  for (Vertex v : {u1, u2, v1, v2, w1, w2}) gad.fe.add({v});
  if (l == k + 1) gad.fe.add({static_cast<Vertex>(5 + k + l)});
  const long long q = gad.q;
  for (long long i = 1; i <= k; ++i)
    gad.fe.add({x(i), v1, x(i + 1), w1, u1, u2, w2, y(q * i), v2, y(q * i + 1)});
  // No i, j with qi = qj + 1 and qj = qi + 1 (mod k).
  for (long long i = 1; i <= k; ++i)
    for (long long j = 1; j <= k; ++j)
      if (((q * i - q * j - 1) % k + k) % k == 0 && ((q * j - q * i - 1) % k + k) % k == 0)
        throw std::logic_error("gadget: congruence condition fails");
  if (!verify_separation(gad.g_e, gad.fe).separates) throw std::logic_error("gadget: F_e does not separate");
  return gad;
}

int gadget_lower_bound(int n) { return (2 * (n - 7) + 2) / 3; }

int gadget_lower_bound(const Gadget& gad) { return gadget_lower_bound(gad.n); }

double min_degree_threshold(int n) {
  const double lnln = n >= 3 ? std::log(std::log(static_cast<double>(n))) : 0.0;
  return n / 2.0 + 9 * std::sqrt(n * std::max(0.0, lnln));
}

MinDegreeResult separate_min_degree(const Graph& g, RngSeed seed, const MinDegreeParams& params) {
  const int n = g.order();
  if (n < 2) throw InvalidInput("separate_min_degree needs n >= 2");
  MinDegreeResult res;
  const double thr = min_degree_threshold(n);
  res.threshold_met = g.min_degree() >= thr;
  if (!res.threshold_met && !params.override_threshold)
    throw PreconditionViolation("min-degree", "minimum degree " + std::to_string(g.min_degree()) +
                                                  " below " + std::to_string(thr));
  const int ell = lower_bound_log(n);
  Rng rng(seed);
  std::vector<std::uint32_t> labels(std::size_t{1} << ell);
  std::vector<int> fail_count(ell, 0);
  const VertexSet& V = g.vertices();
  for (int a = 0; a < params.attempts; ++a) {
    res.attempts = a + 1;
    std::iota(labels.begin(), labels.end(), 0u);
    for (int i = 0; i < n; ++i) std::swap(labels[i], labels[i + rng.below(labels.size() - i)]);
    std::vector<VertexSet> S(ell);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < ell; ++j)
        if ((labels[i] >> j) & 1) S[j].push_back(V[i]);
    bool posa = true;
    for (int j = 0; j < ell && posa; ++j) {
      if (S[j].size() < 3) {
        if (S[j].size() == 2 && !g.adjacent(S[j][0], S[j][1])) {
          posa = false;
          ++fail_count[j];
        }
        continue;
      }
      if (!posa_check(induced(g, S[j]))) {
        posa = false;
        ++fail_count[j];
      }
    }
    if (!posa) continue;
    ++res.posa_passes;
    PathSystem sys;
    int shorts = 0;
    bool ok = true;
    for (int j = 0; j < ell && ok; ++j) {
      if (S[j].size() < 3) {
        sys.add(S[j]);
        ++shorts;
        continue;
      }
      auto h = hamilton_cycle(induced(g, S[j]), derive_seed(seed, {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(j)}), params.ham);
      if (!h.found()) {
        ok = false;
        ++fail_count[j];
        break;
      }
      sys.add(h.path, true);
    }
    if (!ok) continue;
    if (!verify_separation(g, sys).separates) throw std::logic_error("separate_min_degree: output does not separate");
    res.system = std::move(sys);
    res.short_sets = shorts;
    return res;
  }
  int worst = static_cast<int>(std::max_element(fail_count.begin(), fail_count.end()) - fail_count.begin());
  throw BudgetExhausted("separate_min_degree: set " + std::to_string(worst + 1) + " failed in " +
                        std::to_string(fail_count[worst]) + " of " + std::to_string(res.attempts) + " labellings");
}

}  // namespace sepaths
