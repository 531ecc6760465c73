#include <benchmark/benchmark.h>

#include "flagstar/quantum.hpp"

namespace {

using namespace flagstar;

void BM_QuantumRing(benchmark::State& state) {
  const auto basis = std::make_shared<const SchubertBasis>(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(make_quantum_ring(basis));
}
BENCHMARK(BM_QuantumRing)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_QuantumTable(benchmark::State& state) {
  const auto basis = std::make_shared<const SchubertBasis>(static_cast<int>(state.range(0)));
  const auto ring = make_quantum_ring(basis);
  for (auto _ : state) benchmark::DoNotOptimize(quantum_table(*ring));
}
BENCHMARK(BM_QuantumTable)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_QuantumAxioms(benchmark::State& state) {
  const auto basis = std::make_shared<const SchubertBasis>(static_cast<int>(state.range(0)));
  const auto ring = make_quantum_ring(basis);
  const auto table = quantum_table(*ring);
  const auto classical = classical_structure_constants(*basis);
  for (auto _ : state) benchmark::DoNotOptimize(verify_quantum_axioms(*ring, table, classical));
}
BENCHMARK(BM_QuantumAxioms)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_SchubertBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(SchubertBasis(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SchubertBasis)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace
