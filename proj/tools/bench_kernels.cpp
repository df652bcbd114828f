#include <benchmark/benchmark.h>

#include "srings/catalog.hpp"
#include "srings/sring.hpp"

using namespace srings;

namespace {

const SRing& big_ring() {
  static const SRing a = example12(Example12Params{}, true).ring;
  return a;
}

void BM_ValidateSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(axiom_violation_serial(big_ring()));
}

void BM_ValidateParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(axiom_violation(big_ring()));
}

void BM_SweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(schurity_sweep_serial(static_cast<int>(st.range(0))));
}

void BM_SweepParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(schurity_sweep(static_cast<int>(st.range(0))));
}

void BM_Enumerate(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_srings(static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_ValidateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(48)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(48)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->Arg(64)->Arg(72)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
