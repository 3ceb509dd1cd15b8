#include <benchmark/benchmark.h>

#include "qpulse/encoded_info.hpp"
#include "qpulse/qfi.hpp"
#include "qpulse/sweep.hpp"

namespace {

using namespace qpulse;

const PulseConfig kCfg(0.5, 0.2, 1.0);
const Angles kAngles(1.1, 2.3);

void BM_PropagatorExact(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_propagator(kCfg, 1.0, PropagatorMode::Exact));
    }
}
BENCHMARK(BM_PropagatorExact);

void BM_PropagatorPaper(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_propagator(kCfg, 1.0, PropagatorMode::PaperLiteral));
    }
}
BENCHMARK(BM_PropagatorPaper);

void BM_QfiBlochTheta(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            qfi_bloch(kCfg, 1.0, kAngles, EstimableParameter::Theta, PropagatorMode::Exact));
    }
}
BENCHMARK(BM_QfiBlochTheta);

void BM_QfiSpectralOracle(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qfi_spectral_oracle(
            kCfg, 1.0, kAngles, EstimableParameter::Theta, PropagatorMode::Exact, 1e-6));
    }
}
BENCHMARK(BM_QfiSpectralOracle);

void BM_EncodedInformation(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            encoded_information(kCfg, 1.0, kAngles, PropagatorMode::PaperLiteral));
    }
}
BENCHMARK(BM_EncodedInformation);

void BM_OdeReference(benchmark::State& state) {
    const BlochVector s0 = initial_bloch(kAngles);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_bloch_ode(kCfg, s0, 1.0, 1e-4));
    }
}
BENCHMARK(BM_OdeReference);

// One 64x64 single-observable plane, serial vs. all cores.
void BM_SweepPlane(benchmark::State& state) {
    SweepPlane plane;
    plane.x = {SweepParameter::Theta, 0.0, kPi, 64};
    plane.y = {SweepParameter::Omega0, kOmega0AxisMin, 1.0, 64};
    plane.fixed = {0.0, kPi, 1.0, 0.2, 1.0};
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(plane, PropagatorMode::PaperLiteral,
                                           {Observable::EncodedInfo}, jobs));
    }
}
BENCHMARK(BM_SweepPlane)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
