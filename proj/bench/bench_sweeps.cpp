// Serial reference loops vs the OpenMP kernels on the same sweeps.
#include "squidsim/constants.hpp"
#include "squidsim/sweeps.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace squidsim;

SquidParams reference_squid() {
    DimensionlessSquid d{1.0, 0.5, 2.0, 0.25};
    return denormalize(d, 5e-6, 10.0);
}

SimConfig short_run() {
    SimConfig cfg;
    cfg.transient_skip = 50.0;
    cfg.averaging_window = 300.0;
    return cfg;
}

std::vector<double> biases(int n) {
    std::vector<double> b(n);
    for (int k = 0; k < n; ++k) b[k] = (1.0 + 3.0 * k / (n - 1)) * 5e-6;
    return b;
}

void BM_IvCurveSerial(benchmark::State& state) {
    const auto p = reference_squid();
    const auto b = biases(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::iv_curve(p, short_run(), b));
}

void BM_IvCurveParallel(benchmark::State& state) {
    const auto p = reference_squid();
    const auto b = biases(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(iv_curve(p, short_run(), b));
}

StriplineParams line() { return {1e-6, 1e-9, 0.0316, 3e-10}; }
InputCircuitParams input() { return {0.0, 1e3, 1e-12, 0.0}; }

std::vector<double> omegas(int n) {
    std::vector<double> w(n);
    for (int k = 0; k < n; ++k) w[k] = 1e9 + 4e9 * k / (n - 1);
    return w;
}

void BM_GainSerial(benchmark::State& state) {
    const TransferFunctions tf{3e10, 2e9, {}};
    const auto w = omegas(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::evaluate_gain(tf, line(), input(), w));
}

void BM_GainParallel(benchmark::State& state) {
    const TransferFunctions tf{3e10, 2e9, {}};
    const auto w = omegas(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_gain(tf, line(), input(), w));
}

} // namespace

BENCHMARK(BM_IvCurveSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IvCurveParallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GainSerial)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GainParallel)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
