#include <benchmark/benchmark.h>

#include "areaflow/diagnostics.hpp"
#include "areaflow/geometry.hpp"
#include "areaflow/solver.hpp"

using namespace areaflow;

namespace {

CurvatureProfile shape(std::size_t n) {
  return builtin_shape(FourierShape{{1.0, {{2, 0.08, 0.0}, {3, 0.0, 0.02}}}}, ThetaGrid(n));
}

void BM_Step(benchmark::State& bs) {
  const auto n = static_cast<std::size_t>(bs.range(0));
  StepperConfig cfg;
  cfg.stencil = bs.range(1) == 4 ? StencilOrder::fourth : StencilOrder::second;
  FlowState s = initial_state(shape(n));
  for (auto _ : bs) {
    s = step(s, cfg);
    benchmark::DoNotOptimize(s.kappa.values().data());
  }
}
BENCHMARK(BM_Step)->ArgsProduct({{64, 256, 1024}, {2, 4}});

void BM_SnapshotMetrics(benchmark::State& bs) {
  const FlowState s = initial_state(shape(static_cast<std::size_t>(bs.range(0))));
  for (auto _ : bs) benchmark::DoNotOptimize(snapshot_metrics(s));
}
BENCHMARK(BM_SnapshotMetrics)->Arg(64)->Arg(256)->Arg(1024);

void BM_Radii(benchmark::State& bs) {
  const auto poly = reconstruct(shape(static_cast<std::size_t>(bs.range(0))));
  for (auto _ : bs) benchmark::DoNotOptimize(radii(poly));
}
BENCHMARK(BM_Radii)->Arg(64)->Arg(256)->Arg(1024);

void BM_MedianCurvature(benchmark::State& bs) {
  const auto k = shape(static_cast<std::size_t>(bs.range(0)));
  for (auto _ : bs) benchmark::DoNotOptimize(median_curvature(k));
}
BENCHMARK(BM_MedianCurvature)->Arg(64)->Arg(256)->Arg(1024);

void BM_Reconstruct(benchmark::State& bs) {
  const auto k = shape(static_cast<std::size_t>(bs.range(0)));
  for (auto _ : bs) benchmark::DoNotOptimize(reconstruct(k));
}
BENCHMARK(BM_Reconstruct)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
BENCHMARK_MAIN();
