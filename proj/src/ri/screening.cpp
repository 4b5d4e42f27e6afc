#include "reshoreval/error.hpp"
#include "reshoreval/ri.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

namespace reshoreval::ri {

namespace {

std::optional<ExclusionReason> first_failure(const ScreeningRow& row, const ScreeningPolicy& policy)
{
    if (row.ri_percent < policy.min_ri_percent)
        return ExclusionReason::ri_below_threshold;
    if (policy.require_positive_deficit && !(row.trade_deficit_100k > 0.0))
        return ExclusionReason::deficit_not_positive;
    if (row.logistics_cost_percent < policy.min_logistics_percent)
        return ExclusionReason::logistics_below_threshold;
    return std::nullopt;
}

std::vector<double> scaled_column(const std::vector<ScreeningRow>& rows, double ScreeningRow::*field)
{
    double lo = rows.front().*field;
    double hi = lo;
    for (const auto& r : rows) {
        lo = std::min(lo, r.*field);
        hi = std::max(hi, r.*field);
    }
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(normalize_indicator(r.*field, lo, hi));
    return out;
}

std::vector<double> rank_scores(const std::vector<ScreeningRow>& rows, RankKey key)
{
    std::vector<double> scores;
    scores.reserve(rows.size());
    switch (key) {
        case RankKey::tariff_share:
            for (const auto& r : rows)
                scores.push_back(r.tariff_share_percent);
            break;
        case RankKey::ri:
            for (const auto& r : rows)
                scores.push_back(r.ri_percent);
            break;
        case RankKey::composite: {
            if (rows.empty())
                break;
            const auto ri = scaled_column(rows, &ScreeningRow::ri_percent);
            const auto deficit = scaled_column(rows, &ScreeningRow::trade_deficit_100k);
            const auto logistics = scaled_column(rows, &ScreeningRow::logistics_cost_percent);
            for (std::size_t i = 0; i < rows.size(); ++i)
                scores.push_back((ri[i] + deficit[i] + logistics[i]) / 3.0);
            break;
        }
    }
    return scores;
}

}  // namespace

void validate(const ScreeningPolicy& policy)
{
    if (!std::isfinite(policy.min_ri_percent) || !std::isfinite(policy.min_logistics_percent))
        throw DomainError("screening thresholds must be finite");
}

ScreeningReport screen_candidates(std::span<const ScreeningRow> rows, const ScreeningPolicy& policy)
{
    validate(policy);

    std::set<std::string> labels;
    for (const auto& row : rows) {
        if (!labels.insert(row.label).second)
            throw InputError("duplicate screening label '" + row.label + "'");
        if (!std::isfinite(row.ri_percent) || !std::isfinite(row.trade_deficit_100k) ||
            !std::isfinite(row.logistics_cost_percent) || !std::isfinite(row.tariff_share_percent))
            throw DomainError("screening row '" + row.label + "' has a non-finite value");
        if (row.tariff_share_percent < 0.0)
            throw DomainError("screening row '" + row.label + "' has a negative tariff share");
    }

    ScreeningReport report;
    std::vector<ScreeningRow> passing;
    for (const auto& row : rows) {
        if (const auto reason = first_failure(row, policy))
            report.excluded.push_back({row, *reason});
        else
            passing.push_back(row);
    }

    const auto scores = rank_scores(passing, policy.rank_key);
    std::vector<std::size_t> order(passing.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b])
            return scores[a] > scores[b];
        return passing[a].label < passing[b].label;
    });

    report.shortlist.reserve(passing.size());
    for (auto i : order) {
        report.shortlist.push_back(passing[i]);
        report.tariff_coverage_percent += passing[i].tariff_share_percent;
    }
    return report;
}

std::string_view to_string(RankKey key)
{
    switch (key) {
        case RankKey::tariff_share: return "tariff_share";
        case RankKey::ri: return "ri";
        case RankKey::composite: return "composite";
    }
    return "tariff_share";
}

RankKey parse_rank_key(std::string_view text)
{
    if (text == "tariff_share")
        return RankKey::tariff_share;
    if (text == "ri")
        return RankKey::ri;
    if (text == "composite")
        return RankKey::composite;
    throw DomainError("unknown rank key '" + std::string(text) + "' (allowed: tariff_share, ri, composite)");
}

std::string_view describe(ExclusionReason reason)
{
    switch (reason) {
        case ExclusionReason::ri_below_threshold: return "RI below threshold";
        case ExclusionReason::deficit_not_positive: return "trade deficit not positive";
        case ExclusionReason::logistics_below_threshold: return "logistics cost below threshold";
    }
    return "";
}

ExclusionReason parse_exclusion_reason(std::string_view text)
{
    for (auto r : {ExclusionReason::ri_below_threshold, ExclusionReason::deficit_not_positive,
                   ExclusionReason::logistics_below_threshold})
        if (describe(r) == text)
            return r;
    throw DomainError("unknown exclusion reason '" + std::string(text) + "'");
}

}  // namespace reshoreval::ri
