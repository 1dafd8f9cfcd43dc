#include "sepaths/path_system.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "sepaths/errors.hpp"

namespace sepaths {

namespace {

using Mask = std::uint32_t;

struct Search {
  int k = 0;
  std::vector<Mask> masks;
  std::unordered_map<std::uint64_t, int> failed;  // canonical partition -> largest failing depth
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
  std::vector<Mask> chosen;

  static std::uint64_t canonical(std::vector<std::uint8_t>& labels) {
    std::uint8_t remap[64];
    std::fill(std::begin(remap), std::end(remap), 0xff);
    std::uint8_t next = 0;
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto& r = remap[labels[i]];
      if (r == 0xff) r = next++;
      labels[i] = r;
      key |= static_cast<std::uint64_t>(r) << (4 * i);
    }
    return key;
  }

  bool dfs(std::vector<std::uint8_t> labels, int depth) {
    if (++nodes > max_nodes) throw BudgetExhausted("exact_sp: node budget exhausted");
    std::uint64_t key = canonical(labels);
    int classes = 0;
    std::vector<int> size(k, 0);
    for (auto l : labels) {
      classes = std::max(classes, l + 1);
      ++size[l];
    }
    if (classes == k) return true;
    if (depth == 0) return false;
    int big = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
    if (depth < 31 && size[big] > (1 << depth)) return false;
    if (static_cast<std::uint64_t>(k) > classes * (std::uint64_t{1} << std::min(depth, 20))) return false;
    auto it = failed.find(key);
    if (it != failed.end() && it->second >= depth) return false;

    Mask cls = 0;
    for (int i = 0; i < k; ++i)
      if (labels[i] == big) cls |= Mask{1} << i;
    // Children that split the most collided class, most balanced first, deduplicated by result.
    std::vector<std::pair<int, Mask>> cand;
    for (Mask m : masks) {
      Mask in = m & cls;
      if (in == 0 || in == cls) continue;
      int a = std::popcount(in), b = std::popcount(cls) - a;
      cand.push_back({-std::min(a, b), m});
    }
    std::stable_sort(cand.begin(), cand.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::uint64_t> seen;
    for (const auto& [score, m] : cand) {
      std::vector<std::uint8_t> child(labels);
      for (int i = 0; i < k; ++i)
        if (m >> i & 1) child[i] = static_cast<std::uint8_t>(child[i] + k);
      std::vector<std::uint8_t> probe(child);
      std::uint64_t ck = canonical(probe);
      if (std::find(seen.begin(), seen.end(), ck) != seen.end()) continue;
      seen.push_back(ck);
      chosen.push_back(m);
      if (dfs(std::move(probe), depth - 1)) return true;
      chosen.pop_back();
    }
    int& f = failed[key];
    f = std::max(f, depth);
    return false;
  }
};

}  // namespace

OracleResult exact_sp(const Graph& g, const OracleLimits& limits) {
  const int k = g.order();
  if (k > limits.max_vertices)
    throw InvalidInput("exact_sp: " + std::to_string(k) + " vertices exceed the oracle cap " +
                       std::to_string(limits.max_vertices));
  if (k > 16) throw InvalidInput("exact_sp: hard cap is 16 vertices");
  OracleResult res;
  if (k <= 1) return res;

  const auto& vs = g.vertices();
  std::vector<int> local(g.id_space(), -1);
  for (int i = 0; i < k; ++i) local[vs[i]] = i;

  // Every simple path, keyed by vertex set; the first witness found per set is kept.
  std::unordered_map<Mask, VertexPath> by_mask;
  VertexPath cur;
  auto extend = [&](auto&& self, Mask used) -> void {
    by_mask.emplace(used, cur);
    for (Vertex w : g.neighbors(cur.back())) {
      Mask bit = Mask{1} << local[w];
      if (used & bit) continue;
      cur.push_back(w);
      self(self, used | bit);
      cur.pop_back();
    }
  };
  for (int i = 0; i < k; ++i) {
    cur = {vs[i]};
    extend(extend, Mask{1} << i);
  }
  Search s;
  s.k = k;
  s.max_nodes = limits.max_nodes;
  for (const auto& [m, p] : by_mask) s.masks.push_back(m);
  std::sort(s.masks.begin(), s.masks.end());
  res.distinct_paths = s.masks.size();

  int lb = std::max(lower_bound_log(k), lower_bound_leaves(g));
  for (int target = lb; target <= k; ++target) {
    s.chosen.clear();
    if (s.dfs(std::vector<std::uint8_t>(k, 0), target)) {
      res.size = static_cast<int>(s.chosen.size());
      for (Mask m : s.chosen) res.witness.add(by_mask.at(m));
      break;
    }
  }
  res.nodes = s.nodes;
  return res;
}

}  // namespace sepaths
