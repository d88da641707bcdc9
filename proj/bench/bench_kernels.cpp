// Serial vs parallel grid kernels. Row evaluations are independent, so the
// parallel versions must only win wall time, never change bytes; the unit
// tests pin the equality, this target measures the speedup.

#include <benchmark/benchmark.h>

#include "qbraess/game.hpp"
#include "qbraess/sweep.hpp"

namespace {

using namespace qbraess;

NetworkConfig surface_config(int n) {
    return NetworkConfig{.n_half = n, .werner_p = 0.9, .alpha = default_alpha(),
                         .has_cd_edge = true};
}

void BM_SurfaceSerial(benchmark::State& state) {
    const auto cfg = surface_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rows = surface_rows_serial(cfg);
        benchmark::DoNotOptimize(rows.data());
    }
}

void BM_SurfaceParallel(benchmark::State& state) {
    const auto cfg = surface_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rows = surface_rows(cfg);
        benchmark::DoNotOptimize(rows.data());
    }
}

std::vector<double> p_grid(int points) {
    std::vector<double> ps(points);
    for (int i = 0; i < points; ++i) {
        ps[i] = 0.34 + (1.0 - 0.34) * i / (points - 1);
    }
    return ps;
}

void BM_ParadoxScanSerial(benchmark::State& state) {
    const auto ps = p_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rows = paradox_region_serial(20, default_alpha(), ps);
        benchmark::DoNotOptimize(rows.data());
    }
}

void BM_ParadoxScanParallel(benchmark::State& state) {
    const auto ps = p_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rows = paradox_region(20, default_alpha(), ps);
        benchmark::DoNotOptimize(rows.data());
    }
}

}  // namespace

BENCHMARK(BM_SurfaceSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SurfaceParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParadoxScanSerial)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParadoxScanParallel)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
