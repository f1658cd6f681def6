#include <benchmark/benchmark.h>

#include "vexloci/fixture.hpp"
#include "vexloci/localization.hpp"
#include "vexloci/oracle.hpp"

namespace {

using namespace vexloci;

void BM_LocalizationIdentity(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_localization_identity(size));
}
BENCHMARK(BM_LocalizationIdentity)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PushforwardEF(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_pushforward_ef(n, {0, 1}, 6));
}
BENCHMARK(BM_PushforwardEF)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_BasicD(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_basicD(2, 1, {0}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BasicD)->DenseRange(4, 6, 2)->Unit(benchmark::kMillisecond);

void BM_GammaOrthogonal(benchmark::State& state) {
  auto q = make_quadric(static_cast<int>(state.range(0)), {0});
  auto fx = frame_fixture(q, Structure::OrthogonalEven);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_of(fx, 6));
}
BENCHMARK(BM_GammaOrthogonal)->DenseRange(2, 4);

void BM_PropertyC(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_property_c(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PropertyC)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
