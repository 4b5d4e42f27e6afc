// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare scaling.

#include "reshoreval/kernels.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

using namespace reshoreval::kernels;

namespace {

struct Columns
{
    std::vector<double> mass, km;
    std::vector<std::uint8_t> mode;
};

const Columns& columns(std::size_t n)
{
    static std::map<std::size_t, Columns> cache;
    auto& c = cache[n];
    if (c.mass.empty() && n > 0) {
        std::mt19937_64 rng(n);
        std::uniform_real_distribution<double> mass(0.0, 300.0), km(0.0, 20000.0);
        for (std::size_t i = 0; i < n; ++i) {
            c.mass.push_back(mass(rng));
            c.km.push_back(km(rng));
            c.mode.push_back(static_cast<std::uint8_t>(rng() % kModeSlots));
        }
    }
    return c;
}

const FactorMatrix kFactors{{{0.1, 0.00001, 0.000017}, {0.0088472, 0.0000064845, 0.0000053217}}};

template <ModeGasTotals (*Kernel)(const LegColumns&, const FactorMatrix&)>
void accumulate(benchmark::State& state)
{
    const auto& c = columns(static_cast<std::size_t>(state.range(0)));
    const LegColumns view{c.mass, c.km, c.mode};
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(view, kFactors));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <void (*Kernel)(std::span<const double>, double, double, std::span<double>)>
void normalize(benchmark::State& state)
{
    const auto& c = columns(static_cast<std::size_t>(state.range(0)));
    std::vector<double> out(c.km.size());
    for (auto _ : state) {
        Kernel(c.km, 0.0, 20000.0, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(accumulate<serial::accumulate_emissions>)->Name("accumulate/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(accumulate<parallel::accumulate_emissions>)->Name("accumulate/parallel")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(normalize<serial::normalize>)->Name("normalize/serial")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);
BENCHMARK(normalize<parallel::normalize>)->Name("normalize/parallel")->RangeMultiplier(8)->Range(1 << 10, 1 << 22);

BENCHMARK_MAIN();
