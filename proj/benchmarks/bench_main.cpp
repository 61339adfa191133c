#include <benchmark/benchmark.h>

#include "dfrac/demand.hpp"
#include "dfrac/dynamics.hpp"
#include "dfrac/metrics.hpp"
#include "dfrac/raster.hpp"

using namespace dfrac;

static void BM_IterateEscape(benchmark::State& state) {
  IterationConfig cfg{static_cast<int>(state.range(0)), 2.0};
  const Complex c{0.355, 0.17075}; // bounded orbit, worst case
  for (auto _ : state) {
    auto res = iterate_escape({0, 0}, c, cfg);
    benchmark::DoNotOptimize(res);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IterateEscape)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_JuliaRender(benchmark::State& state) {
  Viewport vp{-1.6, 1.6, -1.6, 1.6, static_cast<int>(state.range(0)),
              static_cast<int>(state.range(0))};
  IterationConfig cfg{500, 2.0};
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto raster =
        render_raster(RenderMode::julia, {0.355, 0.17075}, vp, cfg, 64, workers);
    benchmark::DoNotOptimize(raster.pixels.data());
  }
}
BENCHMARK(BM_JuliaRender)
    ->Args({256, 1})
    ->Args({512, 1})
    ->Args({512, 4})
    ->Args({1024, 1})
    ->Args({1024, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_BoundaryAndBoxDim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Viewport vp{-1.6, 1.6, -1.6, 1.6, n, n};
  auto raster = render_raster(RenderMode::julia, {0.355, 0.17075}, vp,
                              IterationConfig{500, 2.0}, 64, 1);
  static constexpr std::array<int, 5> scales = {2, 4, 8, 16, 32};
  for (auto _ : state) {
    auto fit = box_counting_dimension(boundary_mask(raster), scales);
    benchmark::DoNotOptimize(fit);
  }
  state.SetLabel("grid " + std::to_string(n));
}
BENCHMARK(BM_BoundaryAndBoxDim)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_DistanceProbe(benchmark::State& state) {
  IterationConfig cfg{1000, 2.0};
  const Complex c19{0.355, 0.17075};
  for (auto _ : state) {
    double d = distance_to_m_boundary(c19, cfg);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DistanceProbe)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
