#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>

#include "specq/analysis.hpp"
#include "specq/integrate.hpp"
#include "specq/specfun.hpp"

using namespace specq;

namespace {
const LevelSpec kHalf = LevelSpec::fraction(0.5);
}

static void BM_LambertW(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lambert_w0(-3.0 * std::exp(-3.0)));
}
BENCHMARK(BM_LambertW);

static void BM_Zeta(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(riemann_zeta(4.0));
}
BENCHMARK(BM_Zeta);

static void BM_BoseIntegral(benchmark::State& state) {
    const double inf = std::numeric_limits<double>::infinity();
    for (auto _ : state) {
        benchmark::DoNotOptimize(adaptive_integrate(
            [](double x) { return x == 0.0 ? 0.0 : std::pow(x, 3) / std::expm1(x); },
            0.0, inf));
    }
}
BENCHMARK(BM_BoseIntegral);

static void BM_LevelPoints(benchmark::State& state) {
    const LineShape s = GeneralizedThermal{3.0, -1.0};
    for (auto _ : state) benchmark::DoNotOptimize(level_points(s, kHalf));
}
BENCHMARK(BM_LevelPoints);

static void BM_FullReportThermal(benchmark::State& state) {
    const LineShape s = GeneralizedThermal{3.0, -1.0};
    for (auto _ : state) benchmark::DoNotOptimize(full_report(s, kHalf));
}
BENCHMARK(BM_FullReportThermal);

static void BM_VoigtEval(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_voigt(1.0, 1.0));
}
BENCHMARK(BM_VoigtEval);

static void BM_SampleCurve(benchmark::State& state) {
    const LineShape s = RlcConductance{10.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_curve(s, 0.5, 2.0, 512, false));
}
BENCHMARK(BM_SampleCurve);

BENCHMARK_MAIN();
