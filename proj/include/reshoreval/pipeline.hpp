#pragma once

// Three-stage reshoring decision: RI screen, then TCO comparison, then the
// transport-emission check. Stages gate each other in that order.

#include "reshoreval/ghg.hpp"
#include "reshoreval/ri.hpp"
#include "reshoreval/tco.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reshoreval::pipeline {

enum class Recommendation
{
    reshore,
    retain_offshore,
    insufficient_data,
};

std::string_view to_string(Recommendation recommendation);
Recommendation parse_recommendation(std::string_view text);

struct DecisionRecord
{
    std::string product_label;
    std::string naics_code;
    bool screened = false;  // passed the RI screen
    std::string reason;     // why the recommendation is what it is
    std::optional<double> tco_advantage_now;
    std::optional<double> tco_advantage_horizon;
    std::optional<double> ghg_co2e_reduction_percent;
    Recommendation recommendation = Recommendation::insufficient_data;

    bool operator==(const DecisionRecord&) const = default;
};

struct PipelineConfig
{
    ri::ScreeningPolicy screening_policy;
    int horizon_years = 5;
    bool require_ghg_non_negative = true;
    bool evaluate_excluded = false;  // fill TCO/GHG numbers for screened-out products too

    bool operator==(const PipelineConfig&) const = default;
};

void validate(const PipelineConfig& config);

struct ScenarioPair
{
    tco::SourcingScenario domestic;
    tco::SourcingScenario offshore;
};

struct LegPair
{
    std::vector<ghg::TransportLeg> offshore;
    std::vector<ghg::TransportLeg> reshore;
};

struct PipelineInputs
{
    std::vector<ri::ScreeningRow> rows;
    std::map<std::string, ScenarioPair> tco_pairs;  // keyed by product label
    std::map<std::string, LegPair> ghg_pairs;       // keyed by product label; optional per product
    ghg::EmissionFactorTable factors;
    ghg::GwpSet gwp;
};

/// One record per input row, sorted by product label. A shortlisted product
/// without TCO data (or, with require_ghg_non_negative, without leg data)
/// gets insufficient_data rather than an error.
std::vector<DecisionRecord> run_pipeline(const PipelineInputs& inputs, const PipelineConfig& config);

}  // namespace reshoreval::pipeline
