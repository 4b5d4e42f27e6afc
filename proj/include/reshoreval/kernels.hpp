#pragma once

// Data-parallel inner loops. Every kernel has a plain serial reference in
// `serial::` and an OpenMP version in `parallel::`; tests hold the two against
// each other and bench/ times them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace reshoreval::kernels {

inline constexpr std::size_t kModeSlots = 2;  // road, sea
inline constexpr std::size_t kGasSlots = 3;   // CO2, CH4, N2O

/// kg of gas per tonne-km, indexed [mode][gas].
using FactorMatrix = std::array<std::array<double, kGasSlots>, kModeSlots>;
/// kg of gas, indexed [mode][gas].
using ModeGasTotals = std::array<std::array<double, kGasSlots>, kModeSlots>;

/// Structure-of-arrays view over a leg list. All spans have equal length and
/// every mode index is < kModeSlots; callers validate before dispatching.
struct LegColumns
{
    std::span<const double> mass_tonnes;
    std::span<const double> distance_km;
    std::span<const std::uint8_t> mode;

    std::size_t size() const noexcept { return mass_tonnes.size(); }
};

/// Legs per partial sum in the parallel reduction. Partials are combined in
/// block order, so the result does not depend on the thread count.
inline constexpr std::size_t kReductionBlock = 4096;

/// Below this many elements the parallel kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 2 * kReductionBlock;

namespace serial {

/// Left-to-right sum of mass * distance * factor over the legs.
ModeGasTotals accumulate_emissions(const LegColumns& legs, const FactorMatrix& factors);

/// out[i] = 6 * (raw[i] - min) / (max - min) + 1, or 4 for a degenerate range.
void normalize(std::span<const double> raw, double min, double max, std::span<double> out);

}  // namespace serial

namespace parallel {

ModeGasTotals accumulate_emissions(const LegColumns& legs, const FactorMatrix& factors);

void normalize(std::span<const double> raw, double min, double max, std::span<double> out);

}  // namespace parallel

}  // namespace reshoreval::kernels
