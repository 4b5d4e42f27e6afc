#pragma once

// Dataset files, one per kind, plus a JSON manifest for GWP values and
// screening/pipeline settings. Column sets are fixed; unknown columns are
// rejected. See docs/schemas.md for the full reference.

#include "reshoreval/ghg.hpp"
#include "reshoreval/pipeline.hpp"
#include "reshoreval/ri.hpp"
#include "reshoreval/tco.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace reshoreval::io {

namespace dataset {
inline constexpr std::string_view indicators = "indicators";
inline constexpr std::string_view indicator_ranges = "indicator_ranges";
inline constexpr std::string_view factors = "factors";
inline constexpr std::string_view profiles = "profiles";
inline constexpr std::string_view weights = "weights";
inline constexpr std::string_view screening = "screening";
inline constexpr std::string_view scenarios = "scenarios";
inline constexpr std::string_view cogs_items = "cogs_items";
inline constexpr std::string_view legs = "legs";
inline constexpr std::string_view emission_factors = "emission_factors";
inline constexpr std::string_view manifest = "manifest";
}  // namespace dataset

/// Every dataset name the loader understands, in load order.
const std::vector<std::string>& known_datasets();

/// File name a dataset has inside a data directory ("legs" -> "legs.csv").
std::string default_file_name(std::string_view dataset_name);

enum class ScenarioRole
{
    domestic,
    offshore,
};

enum class LegScenario
{
    offshore,
    reshore,
};

std::string_view to_string(ScenarioRole role);
std::string_view to_string(LegScenario scenario);

struct ScenarioEntry
{
    ScenarioRole role = ScenarioRole::domestic;
    tco::SourcingScenario scenario;
};

struct LegEntry
{
    std::string product_label;
    LegScenario scenario = LegScenario::offshore;
    ghg::TransportLeg leg;
};

struct RiSettings
{
    std::string domestic_country = "US";
    std::string offshore_country = "CN";
    ri::OffshoreAdjustment adjustment = ri::OffshoreAdjustment::attenuate;
};

struct Settings
{
    ghg::GwpSet gwp;
    pipeline::PipelineConfig pipeline;
    RiSettings ri;
};

struct DatasetBundle
{
    std::vector<ri::IndicatorSeries> indicators;
    std::vector<ri::LocationFactor> factors;
    std::vector<ri::IndustryProfile> profiles;
    std::vector<ri::ScreeningRow> screening_rows;
    std::vector<ScenarioEntry> scenarios;
    std::vector<LegEntry> legs;
    std::vector<ghg::EmissionFactor> emission_factors;
    Settings settings;

    std::set<std::string> loaded;  // dataset names that were read

    bool has(std::string_view dataset_name) const { return loaded.contains(std::string(dataset_name)); }

    /// Domestic/offshore scenario pairs keyed by product label.
    std::map<std::string, pipeline::ScenarioPair> scenario_pairs() const;
    /// Offshore/reshore leg lists keyed by product label.
    std::map<std::string, pipeline::LegPair> leg_pairs() const;
    ghg::EmissionFactorTable factor_table() const;
    pipeline::PipelineInputs pipeline_inputs() const;
};

using DatasetPaths = std::map<std::string, std::filesystem::path>;

/// The known dataset files that exist in `dir`.
DatasetPaths discover_dataset(const std::filesystem::path& dir);

/// Reads and validates every listed dataset, including cross-references
/// between the ones present. Throws InputError carrying every violation
/// found; a partially valid bundle is never returned.
DatasetBundle load_dataset(const DatasetPaths& paths);

/// Same checks on in-memory text, keyed by dataset name. Used by tests and fuzzing.
DatasetBundle load_dataset_text(const std::map<std::string, std::string>& texts);

}  // namespace reshoreval::io
