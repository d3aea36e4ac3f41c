#include <benchmark/benchmark.h>

#include "reeskit/families.hpp"
#include "reeskit/homology.hpp"

using namespace reeskit;

static void BM_OrderComplex(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto p = rees_product(remove_min(boolean(n)), chain(n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(order_complex(p).f_vector());
  state.counters["faces"] = static_cast<double>(count_faces(p));
}
BENCHMARK(BM_OrderComplex)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Betti(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto p = rees_product(remove_min(boolean(n)), chain(n - 1));
  for (auto _ : state) benchmark::DoNotOptimize(betti(p).at(static_cast<int>(n) - 1));
}
BENCHMARK(BM_Betti)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_BettiWithTorsion(benchmark::State& state) {
  auto p = rees_product(remove_min(boolean(4)), tary_tree(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(betti(p, {.smith = true}).at(3));
}
BENCHMARK(BM_BettiWithTorsion)->Unit(benchmark::kMillisecond);

static void BM_ReducedEuler(benchmark::State& state) {
  auto p = rees_product(remove_min(boolean(5)), chain(4));
  for (auto _ : state) benchmark::DoNotOptimize(reduced_euler(p));
}
BENCHMARK(BM_ReducedEuler)->Unit(benchmark::kMillisecond);
