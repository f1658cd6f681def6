#include <benchmark/benchmark.h>

#include "vexloci/formulas.hpp"
#include "vexloci/identities.hpp"
#include "vexloci/io.hpp"
#include "vexloci/triple.hpp"

namespace {

using namespace vexloci;

const Triple kWorked{LieType::A, {1, 2, 4}, {1, 3, 6}, {4, 4, 4}, false};

void BM_TypeADet(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classA_det(kWorked, N));
}
BENCHMARK(BM_TypeADet)->DenseRange(11, 15, 2)->Unit(benchmark::kMillisecond);

void BM_TypeARaising(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classA_raising(kWorked, N));
}
BENCHMARK(BM_TypeARaising)->DenseRange(11, 15, 2)->Unit(benchmark::kMillisecond);

void BM_TypeCPfaffian(benchmark::State& state) {
  std::vector<int> lambda(state.range(0));
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = static_cast<int>(lambda.size() - i);
  const int N = default_truncation(lambda);
  for (auto _ : state) benchmark::DoNotOptimize(pf_C(lambda, N));
}
BENCHMARK(BM_TypeCPfaffian)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_TypeCRaising(benchmark::State& state) {
  std::vector<int> lambda(state.range(0));
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = static_cast<int>(lambda.size() - i);
  const int N = default_truncation(lambda);
  for (auto _ : state) benchmark::DoNotOptimize(raising_C(lambda, N));
}
BENCHMARK(BM_TypeCRaising)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_TypeDRaising(benchmark::State& state) {
  std::vector<int> lambda = {3, 2, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(raising_D(lambda, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TypeDRaising)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Knuth4(benchmark::State& state) {
  auto seed = ClassSeries::seed({3, 2, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(verify_knuth(4, static_cast<int>(state.range(0)), seed));
}
BENCHMARK(BM_Knuth4)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_TripleScan(benchmark::State& state) {
  ScanCaps caps;
  caps.max_rank = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triples(LieType::C, caps));
}
BENCHMARK(BM_TripleScan)->DenseRange(2, 4);

void BM_FormulaJsonRoundTrip(benchmark::State& state) {
  auto f = classA_det(kWorked, 12);
  for (auto _ : state) benchmark::DoNotOptimize(formula_from_json(formula_to_json(f)));
}
BENCHMARK(BM_FormulaJsonRoundTrip);

}  // namespace
