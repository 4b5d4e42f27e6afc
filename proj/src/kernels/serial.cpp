#include "reshoreval/kernels.hpp"

namespace reshoreval::kernels::serial {

ModeGasTotals accumulate_emissions(const LegColumns& legs, const FactorMatrix& factors)
{
    ModeGasTotals totals{};
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const double tkm = legs.mass_tonnes[i] * legs.distance_km[i];
        const auto& row = factors[legs.mode[i]];
        auto& acc = totals[legs.mode[i]];
        for (std::size_t g = 0; g < kGasSlots; ++g)
            acc[g] += tkm * row[g];
    }
    return totals;
}

void normalize(std::span<const double> raw, double min, double max, std::span<double> out)
{
    if (max == min) {
        for (auto& v : out)
            v = 4.0;
        return;
    }
    const double span = max - min;
    for (std::size_t i = 0; i < raw.size(); ++i)
        out[i] = 6.0 * ((raw[i] - min) / span) + 1.0;
}

}  // namespace reshoreval::kernels::serial
