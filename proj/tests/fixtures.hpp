#pragma once

// Case-study values typed in by hand, independent of the shipped data files.

#include "reshoreval/ghg.hpp"
#include "reshoreval/pipeline.hpp"
#include "reshoreval/ri.hpp"
#include "reshoreval/tco.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fixtures {

inline std::filesystem::path source_dir()
{
    return RESHOREVAL_SOURCE_DIR;
}

inline std::filesystem::path abc_dir()
{
    return source_dir() / "data" / "abc";
}

inline std::vector<reshoreval::ri::ScreeningRow> abc_screening()
{
    return {
        {"Casting", "331523", 25, 55, 9, 41.13},
        {"Stamping", "336370", 30, 14, 12.89, 25.31},
        {"Forming", "331318", 23, 22, 7.24, 16.28},
        {"Mounting", "331210", 26, 0.37, 9.43, 13.92},
        {"Rubber", "325212", 22, -50, 9.16, 1.56},
        {"Mechanical", "332999", 20, 0.009, 5.25, 0.90},
        {"Plastics", "325211", 23, -100, 10.26, 0.27},
    };
}

/// One column of a TCO table: buckets, premium and the printed totals.
struct TcoColumn
{
    double fob, cogs, hard, premium;
    double printed_pre, printed_grand, printed_5yr;
};

struct TcoTable
{
    std::string product;
    TcoColumn us;
    TcoColumn cn;
    // printed comparison row: FOB advantage offshore, TCO advantage now, after five years
    double fob_adv, tco_now, tco_5yr;
};

inline std::vector<TcoTable> tco_tables()
{
    return {
        {"Casting", {4.46, 0, 0.04, 0, 4.50, 4.50, 4.70}, {3.66, 1.67, 0.15, 0.67, 5.48, 6.15, 7.12}, 0.80, 1.64, 2.42},
        {"Forming", {1.12, 0, 0.01, 0, 1.13, 1.13, 1.18}, {0.92, 0.47, 0.03, 0.67, 1.42, 2.09, 2.43}, 0.20, 0.96, 1.25},
        {"Stamping", {3.41, 0, 0.03, 0, 3.44, 3.44, 4.00}, {2.79, 1.39, 0.11, 0.67, 4.29, 4.96, 5.56}, 0.62, 1.53, 1.56},
        // no printed comparison row for Mounting; these follow from its cost table
        {"Mounting", {0.92, 0, 0.01, 0, 0.93, 0.93, 0.97}, {0.75, 0.35, 0.05, 0.67, 1.15, 1.82, 2.11}, 0.17, 0.89, 1.14},
    };
}

inline reshoreval::tco::SourcingScenario scenario(const std::string& product, const std::string& region,
                                                  const TcoColumn& c, double rate = 0.0)
{
    reshoreval::tco::SourcingScenario s;
    s.product_label = product;
    s.region_label = region;
    s.buckets.fob_price = c.fob;
    s.buckets.cogs = c.cogs;
    s.buckets.other_hard = c.hard;
    s.freight_premium = c.premium;
    s.escalation_rate = rate;
    return s;
}

// Transport calibration: three offshore legs (factory to port by road, ocean,
// port to warehouse by road) and one domestic road leg at 36% of the offshore
// road distance. Sea factors are chosen so the road share of each gas matches
// the published totals: CO2 0.23/0.36, CH4 0.07/0.36, N2O 1/3.
inline constexpr double kRoadOut = 450.0;
inline constexpr double kSea = 11500.0;
inline constexpr double kRoadIn = 1350.0;
inline constexpr double kReshoreRoad = 648.0;

inline std::vector<reshoreval::ghg::EmissionFactor> calibration_factors()
{
    using reshoreval::ghg::Gas;
    using reshoreval::ghg::Mode;
    return {
        {Mode::road, Gas::co2, 0.1},          {Mode::road, Gas::ch4, 0.00001},
        {Mode::road, Gas::n2o, 0.000017},     {Mode::sea, Gas::co2, 0.0088472},
        {Mode::sea, Gas::ch4, 0.0000064845},  {Mode::sea, Gas::n2o, 0.0000053217},
    };
}

inline reshoreval::pipeline::LegPair calibration_legs(const std::string& tag, double mass)
{
    using reshoreval::ghg::DistanceUnit;
    using reshoreval::ghg::Mode;
    reshoreval::pipeline::LegPair p;
    p.offshore = {
        {tag + "-cn-factory-port", Mode::road, mass, kRoadOut, DistanceUnit::km},
        {tag + "-ocean", Mode::sea, mass, kSea, DistanceUnit::km},
        {tag + "-us-port-warehouse", Mode::road, mass, kRoadIn, DistanceUnit::km},
    };
    p.reshore = {{tag + "-us-plant-warehouse", Mode::road, mass, kReshoreRoad, DistanceUnit::km}};
    return p;
}

}  // namespace fixtures
