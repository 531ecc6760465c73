#include <benchmark/benchmark.h>

#include "flagstar/groebner.hpp"

namespace {

using namespace flagstar;

void BM_PeriodicIdeal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(periodic_ideal_basis(n, Presentation::X));
}
BENCHMARK(BM_PeriodicIdeal)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ChartIdeals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int k = 1; k <= n; ++k) benchmark::DoNotOptimize(chart_ideal_basis(n, k));
  }
}
BENCHMARK(BM_ChartIdeals)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_NormalForm(benchmark::State& state) {
  const auto gb = periodic_ideal_basis(4, Presentation::X);
  const auto f = Polynomial::parse("X1^5*X2^3*X3^2 + q1*X2^4*X3 - q3*q4*X1^3");
  for (auto _ : state) benchmark::DoNotOptimize(gb.normal_form(f));
}
BENCHMARK(BM_NormalForm)->Unit(benchmark::kMicrosecond);

}  // namespace
