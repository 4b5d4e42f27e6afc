#pragma once

// Scope-3 upstream transport emissions by the distance-based method:
// mass x distance x per-mode factor, per gas, summed by mode, then weighted to
// CO2e. Port handling emissions are not modeled.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reshoreval::ghg {

enum class Mode
{
    road,
    sea,
};
inline constexpr std::array kModes{Mode::road, Mode::sea};

enum class Gas
{
    co2,
    ch4,
    n2o,
};
inline constexpr std::array kGases{Gas::co2, Gas::ch4, Gas::n2o};

enum class DistanceUnit
{
    km,
    mile,
};

inline constexpr double kKmPerMile = 1.609344;

std::string_view to_string(Mode mode);
std::string_view to_string(Gas gas);
std::string_view to_string(DistanceUnit unit);
/// Throws DomainError listing the allowed values.
Mode parse_mode(std::string_view text);
Gas parse_gas(std::string_view text);
DistanceUnit parse_distance_unit(std::string_view text);

struct TransportLeg
{
    std::string item_id;
    Mode mode = Mode::road;
    double mass_tonnes = 0.0;
    double distance = 0.0;
    DistanceUnit distance_unit = DistanceUnit::km;

    bool operator==(const TransportLeg&) const = default;
};

double distance_km(const TransportLeg& leg);

struct EmissionFactor
{
    Mode mode = Mode::road;
    Gas gas = Gas::co2;
    double kg_per_tonne_km = 0.0;
};

/// Lookup of kg-per-tonne-km factors by (mode, gas).
class EmissionFactorTable
{
public:
    EmissionFactorTable() = default;
    /// Throws DomainError on a negative factor and ConfigError on a duplicate (mode, gas).
    explicit EmissionFactorTable(std::span<const EmissionFactor> factors);

    /// Throws ConfigError when the pair is absent.
    double at(Mode mode, Gas gas) const;
    bool has(Mode mode, Gas gas) const;
    /// True when all three gases are present for `mode`.
    bool covers(Mode mode) const;

    std::vector<EmissionFactor> entries() const;

private:
    std::map<std::pair<Mode, Gas>, double> factors_;
};

/// CO2 in metric tonnes, CH4 and N2O in kilograms.
struct GasVector
{
    double co2_tonnes = 0.0;
    double ch4_kg = 0.0;
    double n2o_kg = 0.0;

    GasVector& operator+=(const GasVector& other);
    friend GasVector operator+(GasVector a, const GasVector& b) { return a += b; }
    bool operator==(const GasVector&) const = default;

    double get(Gas gas) const;
};

struct GwpSet
{
    double ch4 = 28.0;
    double n2o = 265.0;

    bool operator==(const GwpSet&) const = default;
};

/// Both multipliers finite and > 1.
void validate(const GwpSet& gwp);

struct EmissionReport
{
    std::map<Mode, GasVector> per_mode;  // always holds every mode
    GasVector total;
    std::optional<double> co2e_tonnes;
    std::optional<GwpSet> gwp;

    bool operator==(const EmissionReport&) const = default;
};

/// Percent reduction per gas; nullopt marks "not applicable" (zero baseline).
struct GasPercents
{
    std::optional<double> co2;
    std::optional<double> ch4;
    std::optional<double> n2o;

    bool operator==(const GasPercents&) const = default;

    std::optional<double> get(Gas gas) const;
};

struct ReductionReport
{
    std::map<Mode, GasPercents> per_mode;
    GasPercents per_gas;
    std::optional<double> co2e_percent;

    bool operator==(const ReductionReport&) const = default;
};

/// Emissions of one leg. Throws DomainError on negative mass or distance and
/// ConfigError on a missing factor.
GasVector leg_emission(const TransportLeg& leg, const EmissionFactorTable& factors);

/// Per-mode sums over the legs (co2e left empty). Legs are reduced in
/// item_id order, so the result does not depend on input order.
EmissionReport mode_totals(std::span<const TransportLeg> legs, const EmissionFactorTable& factors);

/// co2 + ch4 / 1000 * gwp.ch4 + n2o / 1000 * gwp.n2o, in tonnes CO2e.
double co2e_total(const GasVector& gases, const GwpSet& gwp);

/// mode_totals plus the CO2e rollup.
EmissionReport emission_report(std::span<const TransportLeg> legs, const EmissionFactorTable& factors,
                               const GwpSet& gwp);

/// (offshore - reshore) / offshore * 100 for every cell.
ReductionReport reduction_report(const EmissionReport& offshore, const EmissionReport& reshore);

/// Reduction percent with the not-applicable guard for a zero baseline.
std::optional<double> percent_reduction(double baseline, double scenario);

}  // namespace reshoreval::ghg
