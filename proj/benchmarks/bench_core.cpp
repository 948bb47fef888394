#include <benchmark/benchmark.h>

#include <macmahon/families.hpp>
#include <macmahon/identities.hpp>
#include <macmahon/qtoolkit.hpp>

using namespace macmahon;

namespace {

ExactSeries euler(int order) {
  return pochhammer({.sign = Sign::plus, .offset = 1, .step = 1, .length = kUnbounded}, order);
}

void BM_Mul(benchmark::State &state) {
  const int order = static_cast<int>(state.range(0));
  const auto a = invert(euler(order));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * a);
  }
}
BENCHMARK(BM_Mul)->Arg(100)->Arg(300)->Arg(1000);

void BM_Invert(benchmark::State &state) {
  const int order = static_cast<int>(state.range(0));
  const auto e = euler(order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert(e * e));
  }
}
BENCHMARK(BM_Invert)->Arg(100)->Arg(300)->Arg(1000);

void BM_FamilySeries(benchmark::State &state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_series({Family::V, Sign::plus, 4, kUnbounded}, order));
  }
}
BENCHMARK(BM_FamilySeries)->Arg(30)->Arg(100)->Arg(200);

void BM_KernelUnbounded(benchmark::State &state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_h(3, kUnbounded, 1, 2, order));
  }
}
BENCHMARK(BM_KernelUnbounded)->Arg(60)->Arg(200);

void BM_Suite(benchmark::State &state) {
  const int order = static_cast<int>(state.range(0));
  const auto grid = default_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_suite(grid, order, 1));
  }
}
BENCHMARK(BM_Suite)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
