#include "cli/commands.hpp"

#include "optforce/optforce.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace optforce;

namespace {

DriveParams drive(double omega, double delta) {
    return {.omega = omega, .delta = delta, .omega_L = {}, .k_L = 1.0};
}

void bm_closed_form(benchmark::State& state) {
    const ReservoirRates rates(1.0, 3.0, 0.4);
    double omega = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(force_closed_form(drive(omega, 0.7), rates).f);
        omega = omega < 50.0 ? omega * 1.01 : 1.0;
    }
}
BENCHMARK(bm_closed_form);

void bm_steady_state(benchmark::State& state) {
    const ReservoirRates rates(1.0, 3.0, 0.4);
    const auto gen = generator(rates, dressed_frame(drive(2.0, 0.7)));
    for (auto _ : state) benchmark::DoNotOptimize(steady_state(gen).w);
}
BENCHMARK(bm_steady_state);

void bm_evolve(benchmark::State& state) {
    const auto gen = generator(ReservoirRates::equal(), dressed_frame(drive(10.0, 0.0)));
    const auto times = uniform_times(0.0, 20.0, 201);
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(gen, BlochState::dressed_ground(), times, tol).back().w);
    }
}
BENCHMARK(bm_evolve)->Arg(6)->Arg(10)->Arg(12);

void bm_trajectory(benchmark::State& state) {
    const auto times = uniform_times(0.0, 1000.0, 1001);
    for (auto _ : state) {
        const auto run = simulate_trajectory({.v = 0.0, .z = 0.0, .epsilon = 0.01, .t = 0.0},
                                             drive(1.0, 5.0), ReservoirRates::equal(), times, {});
        benchmark::DoNotOptimize(run.samples.back().v);
    }
}
BENCHMARK(bm_trajectory);

void bm_sweep(benchmark::State& state) {
    cli::RunSpec spec;
    spec.command = cli::Command::sweep;
    spec.axes = {{cli::AxisName::omega, 0.01, 50.0, 100, cli::Spacing::log},
                 {cli::AxisName::delta, -20.0, 20.0, 100, cli::Spacing::linear}};
    const cli::RunOptions options{.threads = static_cast<unsigned>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(cli::compute(spec, options).rows.size());
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(bm_sweep)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
