#include <benchmark/benchmark.h>

#include "dioph/contfrac.hpp"
#include "dioph/dioph_sums.hpp"
#include "dioph/equidist.hpp"
#include "dioph/products.hpp"

using namespace dioph;

static void BM_SumRecipNorm(benchmark::State& state) {
  const Real x = Real::golden();
  for (auto _ : state) benchmark::DoNotOptimize(sums::sum_recip_norm(x, static_cast<unsigned long>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SumRecipNorm)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

static void BM_BrownShiue(benchmark::State& state) {
  const Real x = Real::pi();
  for (auto _ : state) benchmark::DoNotOptimize(contfrac::brown_shiue_sum(x, state.range(0)));
}
BENCHMARK(BM_BrownShiue)->RangeMultiplier(100)->Range(100, 100000000)->Unit(benchmark::kMicrosecond);

static void BM_CfExpandPi(benchmark::State& state) {
  const Real x = Real::pi();
  for (auto _ : state) benchmark::DoNotOptimize(contfrac::cf_expand(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CfExpandPi)->Arg(50)->Arg(500)->Unit(benchmark::kMicrosecond);

static void BM_CfExpandSurd(benchmark::State& state) {
  const Real x = Real::parse("sqrt(11)-3");
  for (auto _ : state) benchmark::DoNotOptimize(contfrac::cf_expand(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CfExpandSurd)->Arg(500)->Unit(benchmark::kMicrosecond);

static void BM_Discrepancy(benchmark::State& state) {
  const auto ps = equidist::PointSet::kronecker(Real::golden(), static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(equidist::discrepancy(ps));
}
BENCHMARK(BM_Discrepancy)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMillisecond);

static void BM_ErdosTuranBracket(benchmark::State& state) {
  const auto N = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equidist::erdos_turan_bracket(Real::golden(), N, N));
}
BENCHMARK(BM_ErdosTuranBracket)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_SinProductGeomean(benchmark::State& state) {
  const Real x = Real::golden();
  for (auto _ : state)
    benchmark::DoNotOptimize(products::sin_product_geomean(x, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_SinProductGeomean)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

static void BM_Rademacher(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(products::partition_rademacher(1000, 40));
}
BENCHMARK(BM_Rademacher)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
