#include "reshoreval/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <vector>

namespace reshoreval::kernels::parallel {

ModeGasTotals accumulate_emissions(const LegColumns& legs, const FactorMatrix& factors)
{
    const std::size_t n = legs.size();
    if (n < kParallelThreshold)
        return serial::accumulate_emissions(legs, factors);

    const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
    std::vector<ModeGasTotals> partials(blocks);

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t end = std::min(n, begin + kReductionBlock);
        ModeGasTotals acc{};
        for (std::size_t i = begin; i < end; ++i) {
            const double tkm = legs.mass_tonnes[i] * legs.distance_km[i];
            const auto& row = factors[legs.mode[i]];
            for (std::size_t g = 0; g < kGasSlots; ++g)
                acc[legs.mode[i]][g] += tkm * row[g];
        }
        partials[static_cast<std::size_t>(b)] = acc;
    }

    // fixed combine order
    ModeGasTotals totals{};
    for (const auto& p : partials)
        for (std::size_t m = 0; m < kModeSlots; ++m)
            for (std::size_t g = 0; g < kGasSlots; ++g)
                totals[m][g] += p[m][g];
    return totals;
}

void normalize(std::span<const double> raw, double min, double max, std::span<double> out)
{
    const std::size_t n = raw.size();
    if (n < kParallelThreshold || max == min) {
        serial::normalize(raw, min, max, out);
        return;
    }
    const double span = max - min;
#pragma omp parallel for simd schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        out[static_cast<std::size_t>(i)] = 6.0 * ((raw[static_cast<std::size_t>(i)] - min) / span) + 1.0;
}

}  // namespace reshoreval::kernels::parallel
