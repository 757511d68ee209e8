// Serial reference vs OpenMP kernels on the figure-sized workloads.

#include <benchmark/benchmark.h>

#include "omarray/bands.hpp"
#include "omarray/metrics.hpp"
#include "omarray/scattering.hpp"

using namespace omarray;

namespace
{
LatticeParams fig4()
{
    return {10, 10.0, 20.0, {0.0, 0.0}, 0.0, 0.0, 0.0, 1.0, 1.0, 0.01};
}

Execution mode(const benchmark::State &state)
{
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_SpectrumSweep(benchmark::State &state)
{
    const DynamicalMatrix dyn(fig4());
    const FrequencyGrid grid{-30, 30, 2001};
    for (auto _ : state)
        benchmark::DoNotOptimize(spectrum_sweep(dyn, grid, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.n));
}

void BM_BackscatterMap(benchmark::State &state)
{
    std::vector<double> j;
    for (int i = 0; i <= 20; ++i)
        j.push_back(0.05 * i);
    const auto omega = FrequencyGrid{-30, 30, 501}.points();
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_backscatter(fig4(), j, omega, 1.0, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(j.size() * omega.size()));
}

void BM_BlochBands(benchmark::State &state)
{
    std::vector<double> k;
    for (int i = 0; i <= 2000; ++i)
        k.push_back(-3.141592653589793 + 2 * 3.141592653589793 * i / 2000);
    auto p = fig4();
    p.J_a = p.J_b = p.J_c = 0.1;
    for (auto _ : state)
        benchmark::DoNotOptimize(bloch_bands(p, k, std::nullopt, mode(state)));
}
} // namespace

BENCHMARK(BM_SpectrumSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BackscatterMap)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlochBands)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
