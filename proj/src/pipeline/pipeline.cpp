#include "reshoreval/pipeline.hpp"

#include "reshoreval/error.hpp"

#include <algorithm>
#include <exception>

namespace reshoreval::pipeline {

namespace {

struct GhgOutcome
{
    std::optional<double> reduction_percent;
    bool increases = false;
};

GhgOutcome evaluate_ghg(const LegPair& legs, const PipelineInputs& inputs)
{
    const auto offshore = ghg::emission_report(legs.offshore, inputs.factors, inputs.gwp);
    const auto reshore = ghg::emission_report(legs.reshore, inputs.factors, inputs.gwp);
    const auto reduction = ghg::reduction_report(offshore, reshore);

    GhgOutcome out;
    out.reduction_percent = reduction.co2e_percent;
    if (out.reduction_percent)
        out.increases = *out.reduction_percent < 0.0;
    else
        out.increases = *reshore.co2e_tonnes > 0.0;  // zero baseline: any emission is an increase
    return out;
}

DecisionRecord decide(const ri::ScreeningRow& row, const std::optional<ri::ExclusionReason>& exclusion,
                      const PipelineInputs& inputs, const PipelineConfig& config)
{
    DecisionRecord rec;
    rec.product_label = row.label;
    rec.naics_code = row.naics_code;
    rec.screened = !exclusion;

    const auto tco_it = inputs.tco_pairs.find(row.label);
    const auto ghg_it = inputs.ghg_pairs.find(row.label);
    const bool has_tco = tco_it != inputs.tco_pairs.end();
    const bool has_ghg = ghg_it != inputs.ghg_pairs.end();

    auto fill_tco = [&] {
        const auto cmp = tco::compare_scenarios(tco_it->second.domestic, tco_it->second.offshore,
                                                config.horizon_years);
        rec.tco_advantage_now = cmp.tco_advantage_domestic_now;
        rec.tco_advantage_horizon = cmp.tco_advantage_domestic_horizon;
    };

    if (exclusion) {
        rec.recommendation = Recommendation::retain_offshore;
        rec.reason = "screen: " + std::string(ri::describe(*exclusion));
        if (config.evaluate_excluded) {
            if (has_tco)
                fill_tco();
            if (has_ghg)
                rec.ghg_co2e_reduction_percent = evaluate_ghg(ghg_it->second, inputs).reduction_percent;
        }
        return rec;
    }

    if (!has_tco) {
        rec.recommendation = Recommendation::insufficient_data;
        rec.reason = "tco: no sourcing scenarios for this product";
        return rec;
    }
    fill_tco();
    if (!(*rec.tco_advantage_now > 0.0)) {
        rec.recommendation = Recommendation::retain_offshore;
        rec.reason = "tco: no present-day domestic cost advantage";
        if (config.evaluate_excluded && has_ghg)
            rec.ghg_co2e_reduction_percent = evaluate_ghg(ghg_it->second, inputs).reduction_percent;
        return rec;
    }

    if (!has_ghg) {
        if (config.require_ghg_non_negative) {
            rec.recommendation = Recommendation::insufficient_data;
            rec.reason = "ghg: no transport legs for this product";
        } else {
            rec.recommendation = Recommendation::reshore;
            rec.reason = "screen and tco passed; no transport legs supplied";
        }
        return rec;
    }

    const auto ghg = evaluate_ghg(ghg_it->second, inputs);
    rec.ghg_co2e_reduction_percent = ghg.reduction_percent;
    if (ghg.increases && config.require_ghg_non_negative) {
        rec.recommendation = Recommendation::retain_offshore;
        rec.reason = "ghg: reshoring increases transport emissions";
        return rec;
    }
    rec.recommendation = Recommendation::reshore;
    rec.reason = ghg.increases ? "screen and tco passed; ghg increase not treated as a veto"
                               : "screen, tco and ghg checks passed";
    return rec;
}

}  // namespace

std::string_view to_string(Recommendation recommendation)
{
    switch (recommendation) {
        case Recommendation::reshore: return "reshore";
        case Recommendation::retain_offshore: return "retain_offshore";
        case Recommendation::insufficient_data: return "insufficient_data";
    }
    return "insufficient_data";
}

Recommendation parse_recommendation(std::string_view text)
{
    for (auto r : {Recommendation::reshore, Recommendation::retain_offshore, Recommendation::insufficient_data})
        if (to_string(r) == text)
            return r;
    throw DomainError("unknown recommendation '" + std::string(text) + "'");
}

void validate(const PipelineConfig& config)
{
    ri::validate(config.screening_policy);
    if (config.horizon_years < 1)
        throw DomainError("pipeline horizon must be at least 1 year, got " + std::to_string(config.horizon_years));
}

std::vector<DecisionRecord> run_pipeline(const PipelineInputs& inputs, const PipelineConfig& config)
{
    validate(config);
    const auto screen = ri::screen_candidates(inputs.rows, config.screening_policy);

    std::map<std::string, ri::ExclusionReason> excluded;
    for (const auto& e : screen.excluded)
        excluded.emplace(e.row.label, e.reason);

    std::vector<DecisionRecord> records(inputs.rows.size());
    std::vector<std::exception_ptr> errors(inputs.rows.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(inputs.rows.size()); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const auto& row = inputs.rows[idx];
        try {
            const auto it = excluded.find(row.label);
            const std::optional<ri::ExclusionReason> exclusion =
                it == excluded.end() ? std::nullopt : std::optional{it->second};
            records[idx] = decide(row, exclusion, inputs, config);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::sort(records.begin(), records.end(),
              [](const DecisionRecord& a, const DecisionRecord& b) { return a.product_label < b.product_label; });
    return records;
}

}  // namespace reshoreval::pipeline
