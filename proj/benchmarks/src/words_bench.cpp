#include <benchmark/benchmark.h>

#include "reeskit/words.hpp"

using namespace reeskit;

static void BM_JointPolynomial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(joint_polynomial(n, Statistic::aid, Statistic::des));
}
BENCHMARK(BM_JointPolynomial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_BarredPermutations(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  Letters x(n);
  for (unsigned i = 0; i < n; ++i) x[i] = i + 1;
  for (auto _ : state) benchmark::DoNotOptimize(barred_permutations(x).size());
}
BENCHMARK(BM_BarredPermutations)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
