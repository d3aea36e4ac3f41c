#include <benchmark/benchmark.h>

#include "reeskit/families.hpp"
#include "reeskit/formulas.hpp"
#include "reeskit/labeling.hpp"

using namespace reeskit;

static void BM_IsElLabeling(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto b = boolean(n);
  auto c = chain(n - 1);
  auto rl = rees_el_labeling(remove_min(b), hat_of_minus(b, boolean_labeling(b, n)), c, constant_labeling(c));
  for (auto _ : state) benchmark::DoNotOptimize(is_el_labeling(rl.hat, rl.labeling).ok);
  state.counters["elements"] = static_cast<double>(rl.hat.size());
}
BENCHMARK(BM_IsElLabeling)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_AscentFreeChains(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  auto nc = noncrossing(n + 1);
  auto lam = hat_extension(nc, noncrossing_labeling(nc, n + 1));
  for (auto _ : state) benchmark::DoNotOptimize(betti_poly_tree_product(nc, lam, TreeMode::MinAndMax).total());
}
BENCHMARK(BM_AscentFreeChains)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
