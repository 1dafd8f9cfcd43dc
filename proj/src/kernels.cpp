#include "sepaths/kernels.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace sepaths {

std::vector<Bitstring> membership_codes_serial(int id_space, const std::vector<VertexPath>& sets) {
  const int m = static_cast<int>(sets.size());
  std::vector<Bitstring> codes(id_space, Bitstring(m));
  for (int j = 0; j < m; ++j)
    for (Vertex v : sets[j]) codes[v].set(j);
  return codes;
}

std::vector<Bitstring> membership_codes_parallel(int id_space,
                                                 const std::vector<VertexPath>& sets) {
  const int m = static_cast<int>(sets.size());
  std::vector<Bitstring> codes(id_space, Bitstring(m));
  const int blocks = (m + 63) / 64;
  // One 64-set block per task: each task owns one word of every code.
#pragma omp parallel for schedule(dynamic)
  for (int b = 0; b < blocks; ++b) {
    const int hi = std::min(m, (b + 1) * 64);
    for (int j = b * 64; j < hi; ++j)
      for (Vertex v : sets[j]) codes[v].words()[b] |= 1ULL << (j & 63);
  }
  return codes;
}

std::vector<char> hamming_close_serial(const std::vector<Bitstring>& vecs, int radius) {
  const std::size_t n = vecs.size();
  std::vector<char> close(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (vecs[i].hamming(vecs[j]) <= radius) close[i] = close[j] = 1;
  return close;
}

std::vector<char> hamming_close_parallel(const std::vector<Bitstring>& vecs, int radius) {
  const long long n = static_cast<long long>(vecs.size());
  std::vector<char> close(n, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      if (j != i && vecs[i].hamming(vecs[j]) <= radius) {
        close[i] = 1;
        break;
      }
  return close;
}

int min_pairwise_hamming_serial(const std::vector<Bitstring>& vecs) {
  int best = INT_MAX;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = i + 1; j < vecs.size(); ++j) best = std::min(best, vecs[i].hamming(vecs[j]));
  return best;
}

int min_pairwise_hamming_parallel(const std::vector<Bitstring>& vecs) {
  int best = INT_MAX;
  const long long n = static_cast<long long>(vecs.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j) best = std::min(best, vecs[i].hamming(vecs[j]));
  return best;
}

std::optional<std::pair<Vertex, Vertex>> first_collision(const VertexSet& vertices,
                                                         const std::vector<Bitstring>& codes) {
  std::vector<Vertex> order(vertices.begin(), vertices.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return codes[a] < codes[b]; });
  std::optional<std::pair<Vertex, Vertex>> best;
  // Within a run of equal codes ids stay increasing (stable sort of a sorted list).
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (codes[order[i]] != codes[order[i + 1]]) continue;
    if (i > 0 && codes[order[i - 1]] == codes[order[i]]) continue;
    std::pair<Vertex, Vertex> cand{order[i], order[i + 1]};
    if (!best || cand < *best) best = cand;
  }
  return best;
}

}  // namespace sepaths
