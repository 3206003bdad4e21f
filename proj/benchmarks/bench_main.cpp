#include <benchmark/benchmark.h>

#include "triquad/cohomology.hpp"
#include "triquad/delpezzo.hpp"
#include "triquad/enumerate.hpp"
#include "triquad/invariants.hpp"

namespace {

using namespace triquad;

void BM_KunnethBox(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (std::int64_t d1 = -6; d1 <= 6; ++d1)
      for (std::int64_t d2 = -6; d2 <= 6; ++d2)
        for (std::int64_t d3 = -6; d3 <= 6; ++d3)
          for (int i = 0; i <= 3; ++i) acc += kunneth_h(i, {d1, d2, d3});
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_KunnethBox);

void BM_ChiRank2(benchmark::State& state) {
  const BundleData B{{2, 2, 2}, {2, 3, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(chi_rank2(B));
}
BENCHMARK(BM_ChiRank2);

void BM_AcmLineCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(initialized_acm_line_bundles());
}
BENCHMARK(BM_AcmLineCensus);

void BM_DivisorialTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(divisorial_table());
}
BENCHMARK(BM_DivisorialTable);

void BM_IntermediateTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(intermediate_table());
}
BENCHMARK(BM_IntermediateTable);

void BM_CurveClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(curve_classes(8, 1));
}
BENCHMARK(BM_CurveClasses);

}  // namespace

BENCHMARK_MAIN();
