#pragma once

// Rendering of engine results as aligned text tables (row labels follow the
// case-study tables), CSV, or JSON. CSV and JSON carry full-precision numbers
// plus two-decimal display strings; JSON parses back to the same values.

#include "reshoreval/ghg.hpp"
#include "reshoreval/pipeline.hpp"
#include "reshoreval/ri.hpp"
#include "reshoreval/tco.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace reshoreval::io {

enum class ReportFormat
{
    table_text,
    csv,
    json,
};

/// Accepts "table", "table_text", "csv", "json".
ReportFormat parse_format(std::string_view text);
std::string_view to_string(ReportFormat format);

struct RenderedReport
{
    ReportFormat format = ReportFormat::table_text;
    std::string content;
};

/// Both sides of one product's cost comparison.
struct TcoProductReport
{
    std::string product_label;
    tco::SourcingScenario domestic;
    tco::SourcingScenario offshore;
    tco::TcoResult domestic_result;
    tco::TcoResult offshore_result;
    tco::TcoComparison comparison;

    bool operator==(const TcoProductReport&) const = default;
};

TcoProductReport make_tco_report(const pipeline::ScenarioPair& pair, int horizon);

struct GhgProductReport
{
    std::string product_label;
    ghg::EmissionReport offshore;
    ghg::EmissionReport reshore;
    ghg::ReductionReport reduction;

    bool operator==(const GhgProductReport&) const = default;
};

GhgProductReport make_ghg_report(std::string product_label, const pipeline::LegPair& legs,
                                 const ghg::EmissionFactorTable& factors, const ghg::GwpSet& gwp);

RenderedReport render_report(const ri::ScreeningReport& report, ReportFormat format);
RenderedReport render_report(const std::vector<ri::RiEvaluation>& evaluations, ReportFormat format);
RenderedReport render_report(const std::vector<TcoProductReport>& products, ReportFormat format);
RenderedReport render_report(const ghg::EmissionReport& report, ReportFormat format);
RenderedReport render_report(const std::vector<GhgProductReport>& products, ReportFormat format);
RenderedReport render_report(const std::vector<pipeline::DecisionRecord>& records, ReportFormat format);

/// Inverse of the JSON rendering. Throws InputError on malformed documents.
void parse_json_report(std::string_view text, ri::ScreeningReport& out);
void parse_json_report(std::string_view text, std::vector<ri::RiEvaluation>& out);
void parse_json_report(std::string_view text, std::vector<TcoProductReport>& out);
void parse_json_report(std::string_view text, ghg::EmissionReport& out);
void parse_json_report(std::string_view text, std::vector<GhgProductReport>& out);
void parse_json_report(std::string_view text, std::vector<pipeline::DecisionRecord>& out);

}  // namespace reshoreval::io
