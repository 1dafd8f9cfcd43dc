#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace sepaths {

using RngSeed = std::uint64_t;

std::uint64_t splitmix64(std::uint64_t x);
// Independent stream seed for (seed, tags...), e.g. (seed, trial) or (seed, round, attempt).
RngSeed derive_seed(RngSeed seed, std::initializer_list<std::uint64_t> tags);

class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  bool coin() { return (engine_() >> 63) != 0; }
  bool bernoulli(double p) { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sepaths
