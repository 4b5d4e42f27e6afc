#include "reshoreval/ghg.hpp"

#include "reshoreval/error.hpp"
#include "reshoreval/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace reshoreval::ghg {

namespace {

std::size_t slot(Mode mode)
{
    return static_cast<std::size_t>(mode);
}

std::size_t slot(Gas gas)
{
    return static_cast<std::size_t>(gas);
}

void check_leg(const TransportLeg& leg)
{
    if (!std::isfinite(leg.mass_tonnes) || leg.mass_tonnes < 0.0) {
        std::ostringstream os;
        os << "leg '" << leg.item_id << "': mass must be >= 0 tonnes, got " << leg.mass_tonnes;
        throw DomainError(os.str());
    }
    if (!std::isfinite(leg.distance) || leg.distance < 0.0) {
        std::ostringstream os;
        os << "leg '" << leg.item_id << "': distance must be >= 0, got " << leg.distance;
        throw DomainError(os.str());
    }
}

void require_factors(Mode mode, const EmissionFactorTable& factors)
{
    for (auto gas : kGases)
        if (!factors.has(mode, gas))
            throw ConfigError("no emission factor for mode '" + std::string(to_string(mode)) + "' and gas '" +
                              std::string(to_string(gas)) + "'");
}

GasVector from_kg(const std::array<double, kernels::kGasSlots>& kg)
{
    return {kg[slot(Gas::co2)] / 1000.0, kg[slot(Gas::ch4)], kg[slot(Gas::n2o)]};
}

}  // namespace

std::string_view to_string(Mode mode)
{
    switch (mode) {
        case Mode::road: return "road";
        case Mode::sea: return "sea";
    }
    return "road";
}

std::string_view to_string(Gas gas)
{
    switch (gas) {
        case Gas::co2: return "CO2";
        case Gas::ch4: return "CH4";
        case Gas::n2o: return "N2O";
    }
    return "CO2";
}

std::string_view to_string(DistanceUnit unit)
{
    return unit == DistanceUnit::km ? "km" : "mile";
}

Mode parse_mode(std::string_view text)
{
    for (auto m : kModes)
        if (to_string(m) == text)
            return m;
    throw DomainError("unknown mode '" + std::string(text) + "' (allowed: road, sea)");
}

Gas parse_gas(std::string_view text)
{
    for (auto g : kGases)
        if (to_string(g) == text)
            return g;
    throw DomainError("unknown gas '" + std::string(text) + "' (allowed: CO2, CH4, N2O)");
}

DistanceUnit parse_distance_unit(std::string_view text)
{
    if (text == "km")
        return DistanceUnit::km;
    if (text == "mile")
        return DistanceUnit::mile;
    throw DomainError("unknown distance unit '" + std::string(text) + "' (allowed: km, mile)");
}

double distance_km(const TransportLeg& leg)
{
    return leg.distance_unit == DistanceUnit::km ? leg.distance : leg.distance * kKmPerMile;
}

EmissionFactorTable::EmissionFactorTable(std::span<const EmissionFactor> factors)
{
    for (const auto& f : factors) {
        if (!std::isfinite(f.kg_per_tonne_km) || f.kg_per_tonne_km < 0.0)
            throw DomainError("emission factor for " + std::string(to_string(f.mode)) + "/" +
                              std::string(to_string(f.gas)) + " must be >= 0");
        if (!factors_.emplace(std::pair{f.mode, f.gas}, f.kg_per_tonne_km).second)
            throw ConfigError("duplicate emission factor for " + std::string(to_string(f.mode)) + "/" +
                              std::string(to_string(f.gas)));
    }
}

double EmissionFactorTable::at(Mode mode, Gas gas) const
{
    const auto it = factors_.find({mode, gas});
    if (it == factors_.end())
        throw ConfigError("no emission factor for mode '" + std::string(to_string(mode)) + "' and gas '" +
                          std::string(to_string(gas)) + "'");
    return it->second;
}

bool EmissionFactorTable::has(Mode mode, Gas gas) const
{
    return factors_.contains({mode, gas});
}

bool EmissionFactorTable::covers(Mode mode) const
{
    return std::all_of(kGases.begin(), kGases.end(), [&](Gas g) { return has(mode, g); });
}

std::vector<EmissionFactor> EmissionFactorTable::entries() const
{
    std::vector<EmissionFactor> out;
    for (const auto& [key, value] : factors_)
        out.push_back({key.first, key.second, value});
    return out;
}

GasVector& GasVector::operator+=(const GasVector& other)
{
    co2_tonnes += other.co2_tonnes;
    ch4_kg += other.ch4_kg;
    n2o_kg += other.n2o_kg;
    return *this;
}

double GasVector::get(Gas gas) const
{
    switch (gas) {
        case Gas::co2: return co2_tonnes;
        case Gas::ch4: return ch4_kg;
        case Gas::n2o: return n2o_kg;
    }
    return 0.0;
}

std::optional<double> GasPercents::get(Gas gas) const
{
    switch (gas) {
        case Gas::co2: return co2;
        case Gas::ch4: return ch4;
        case Gas::n2o: return n2o;
    }
    return std::nullopt;
}

void validate(const GwpSet& gwp)
{
    if (!std::isfinite(gwp.ch4) || !(gwp.ch4 > 1.0) || !std::isfinite(gwp.n2o) || !(gwp.n2o > 1.0)) {
        std::ostringstream os;
        os << "GWP multipliers must be > 1, got CH4 " << gwp.ch4 << " and N2O " << gwp.n2o;
        throw DomainError(os.str());
    }
}

GasVector leg_emission(const TransportLeg& leg, const EmissionFactorTable& factors)
{
    check_leg(leg);
    require_factors(leg.mode, factors);
    const double tkm = leg.mass_tonnes * distance_km(leg);
    return {tkm * factors.at(leg.mode, Gas::co2) / 1000.0, tkm * factors.at(leg.mode, Gas::ch4),
            tkm * factors.at(leg.mode, Gas::n2o)};
}

EmissionReport mode_totals(std::span<const TransportLeg> legs, const EmissionFactorTable& factors)
{
    kernels::FactorMatrix matrix{};
    for (auto mode : kModes)
        for (auto gas : kGases)
            if (factors.has(mode, gas))
                matrix[slot(mode)][slot(gas)] = factors.at(mode, gas);

    std::vector<std::size_t> order(legs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return legs[a].item_id < legs[b].item_id; });

    std::vector<double> mass;
    std::vector<double> km;
    std::vector<std::uint8_t> mode;
    mass.reserve(legs.size());
    km.reserve(legs.size());
    mode.reserve(legs.size());
    for (auto i : order) {
        const auto& leg = legs[i];
        check_leg(leg);
        require_factors(leg.mode, factors);
        mass.push_back(leg.mass_tonnes);
        km.push_back(distance_km(leg));
        mode.push_back(static_cast<std::uint8_t>(slot(leg.mode)));
    }

    const auto kg = kernels::parallel::accumulate_emissions({mass, km, mode}, matrix);

    EmissionReport report;
    for (auto m : kModes) {
        report.per_mode[m] = from_kg(kg[slot(m)]);
        report.total += report.per_mode[m];
    }
    return report;
}

double co2e_total(const GasVector& gases, const GwpSet& gwp)
{
    return gases.co2_tonnes + gases.ch4_kg / 1000.0 * gwp.ch4 + gases.n2o_kg / 1000.0 * gwp.n2o;
}

EmissionReport emission_report(std::span<const TransportLeg> legs, const EmissionFactorTable& factors,
                               const GwpSet& gwp)
{
    auto report = mode_totals(legs, factors);
    report.co2e_tonnes = co2e_total(report.total, gwp);
    report.gwp = gwp;
    return report;
}

std::optional<double> percent_reduction(double baseline, double scenario)
{
    if (!(baseline > 0.0))
        return std::nullopt;
    return (baseline - scenario) / baseline * 100.0;
}

ReductionReport reduction_report(const EmissionReport& offshore, const EmissionReport& reshore)
{
    auto cells = [](const GasVector& base, const GasVector& scen) {
        return GasPercents{percent_reduction(base.co2_tonnes, scen.co2_tonnes),
                           percent_reduction(base.ch4_kg, scen.ch4_kg),
                           percent_reduction(base.n2o_kg, scen.n2o_kg)};
    };
    auto mode_of = [](const EmissionReport& r, Mode m) {
        const auto it = r.per_mode.find(m);
        return it == r.per_mode.end() ? GasVector{} : it->second;
    };

    ReductionReport out;
    for (auto m : kModes)
        out.per_mode[m] = cells(mode_of(offshore, m), mode_of(reshore, m));
    out.per_gas = cells(offshore.total, reshore.total);
    if (offshore.co2e_tonnes && reshore.co2e_tonnes)
        out.co2e_percent = percent_reduction(*offshore.co2e_tonnes, *reshore.co2e_tonnes);
    return out;
}

}  // namespace reshoreval::ghg
