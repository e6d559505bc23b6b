#include "sumrules/bounds.hpp"
#include "sumrules/combinat.hpp"
#include "sumrules/identities.hpp"
#include "sumrules/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace sumrules;

namespace {

// Cached rows are the steady state; these measure lookups after warm-up.
void BM_Stirling1Row(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stirling1_row(n).size());
}
BENCHMARK(BM_Stirling1Row)->Arg(50)->Arg(200);

void BM_FallingFactorialPoly(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(falling_factorial_poly(n).degree());
}
BENCHMARK(BM_FallingFactorialPoly)->Arg(50)->Arg(200);

void BM_SchlomilchRow(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    for (unsigned i = 0; i <= q; ++i) benchmark::DoNotOptimize(schlomilch_stirling1(q, i));
}
BENCHMARK(BM_SchlomilchRow)->Arg(8)->Arg(16);

void BM_BellSum(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bell_partial(n, n));
}
BENCHMARK(BM_BellSum)->Arg(100)->Arg(200);

void BM_MainSumRule(benchmark::State& state) {
  const auto n = static_cast<long long>(state.range(0));
  for (auto _ : state)
    for (long long r = -1; r < n; ++r)
      benchmark::DoNotOptimize(verify_identity(IdentityId::MainSumRule, EvalMode::Corrected, {{"n", n}, {"r", r}}).equal);
}
BENCHMARK(BM_MainSumRule)->Arg(12)->Arg(40);

void BM_NestedSchlomilch(benchmark::State& state) {
  const auto n = static_cast<long long>(state.range(0));
  for (auto _ : state)
    for (long long r = -1; r < n; ++r)
      benchmark::DoNotOptimize(
          verify_identity(IdentityId::NestedSchlomilch, EvalMode::Corrected, {{"n", n}, {"r", r}}).equal);
}
BENCHMARK(BM_NestedSchlomilch)->Arg(6)->Arg(8);

void BM_OracleFixedPoints(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_statistic(StatisticId::FixedPoints, 9, std::nullopt, {}, threads).total());
}
BENCHMARK(BM_OracleFixedPoints)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OraclePartitions(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_statistic(StatisticId::PartitionBlocks, 10, std::nullopt, {}, 1).total());
}
BENCHMARK(BM_OraclePartitions)->Unit(benchmark::kMillisecond);

void BM_BerendTalSweep(benchmark::State& state) {
  for (auto _ : state)
    for (unsigned n = 1; n <= 200; ++n) benchmark::DoNotOptimize(check_berend_tal(n).satisfied);
}
BENCHMARK(BM_BerendTalSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
