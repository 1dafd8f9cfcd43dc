#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sepaths/bitstring.hpp"
#include "sepaths/graph.hpp"

namespace sepaths {

// Membership codes: result[v] bit j set iff v lies on sets[j].
std::vector<Bitstring> membership_codes_serial(int id_space,
                                               const std::vector<VertexPath>& sets);
std::vector<Bitstring> membership_codes_parallel(int id_space,
                                                 const std::vector<VertexPath>& sets);

// For each vector i, whether some j != i lies within Hamming distance <= radius.
std::vector<char> hamming_close_serial(const std::vector<Bitstring>& vecs, int radius);
std::vector<char> hamming_close_parallel(const std::vector<Bitstring>& vecs, int radius);

// Minimum pairwise Hamming distance (size 0/1 inputs give INT_MAX).
int min_pairwise_hamming_serial(const std::vector<Bitstring>& vecs);
int min_pairwise_hamming_parallel(const std::vector<Bitstring>& vecs);

// Lexicographically least pair of listed vertices with equal codes.
std::optional<std::pair<Vertex, Vertex>> first_collision(const VertexSet& vertices,
                                                         const std::vector<Bitstring>& codes);

}  // namespace sepaths
