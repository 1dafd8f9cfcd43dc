#include <benchmark/benchmark.h>

#include "sepaths/kernels.hpp"
#include "sepaths/path_system.hpp"
#include "sepaths/randgen.hpp"
#include "sepaths/rng.hpp"
#include "sepaths/strategy.hpp"

using namespace sepaths;

namespace {

std::vector<VertexPath> random_sets(int n, int count, RngSeed seed) {
  Rng rng(seed);
  std::vector<VertexPath> sets(count);
  for (auto& s : sets)
    for (Vertex v = 0; v < n; ++v)
      if (rng.coin()) s.push_back(v);
  return sets;
}

void BM_MembershipSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto sets = random_sets(n, 40, 1);
  for (auto _ : st) benchmark::DoNotOptimize(membership_codes_serial(n, sets));
}

void BM_MembershipParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto sets = random_sets(n, 40, 1);
  for (auto _ : st) benchmark::DoNotOptimize(membership_codes_parallel(n, sets));
}

void BM_HammingSerial(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto codes = membership_codes_serial(n, random_sets(n, 64, 2));
  for (auto _ : st) benchmark::DoNotOptimize(hamming_close_serial(codes, 4));
}

void BM_HammingParallel(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto codes = membership_codes_serial(n, random_sets(n, 64, 2));
  for (auto _ : st) benchmark::DoNotOptimize(hamming_close_parallel(codes, 4));
}

void BM_Verify(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Graph g = gnp(n, 0.5, 3);
  PathSystem sys = run_strategy(g, Strategy::Dense, 3).system;
  for (auto _ : st) benchmark::DoNotOptimize(verify_separation(g, sys));
}

void BM_DenseSeparator(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Graph g = gnp(n, 0.5, 4);
  for (auto _ : st) benchmark::DoNotOptimize(run_strategy(g, Strategy::Dense, 4));
}

}  // namespace

BENCHMARK(BM_MembershipSerial)->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK(BM_MembershipParallel)->Arg(1 << 12)->Arg(1 << 15);
BENCHMARK(BM_HammingSerial)->Arg(1 << 10)->Arg(1 << 12);
BENCHMARK(BM_HammingParallel)->Arg(1 << 10)->Arg(1 << 12);
BENCHMARK(BM_Verify)->Arg(256)->Arg(1024);
BENCHMARK(BM_DenseSeparator)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
