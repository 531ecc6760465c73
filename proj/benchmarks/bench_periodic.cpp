#include <benchmark/benchmark.h>

#include "flagstar/representatives.hpp"

namespace {

using namespace flagstar;

void BM_PeriodicModel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_periodic_model(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PeriodicModel)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_StarAxioms(benchmark::State& state) {
  const auto m = build_periodic_model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_star_axioms(*m.ring, m.star, m.classical));
}
BENCHMARK(BM_StarAxioms)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_Frobenius(benchmark::State& state) {
  const auto m = build_periodic_model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_frobenius(m.star));
}
BENCHMARK(BM_Frobenius)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_Representatives(benchmark::State& state) {
  const auto m = build_periodic_model(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(representative_table(m));
}
BENCHMARK(BM_Representatives)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace
