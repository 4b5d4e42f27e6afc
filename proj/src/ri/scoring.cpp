#include "reshoreval/error.hpp"
#include "reshoreval/ri.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

namespace reshoreval::ri {

namespace {

bool is_naics_code(const std::string& code)
{
    return code.size() == 6 && std::all_of(code.begin(), code.end(), [](char c) { return c >= '0' && c <= '9'; });
}

double weighted_base(const FactorMeans& factor_means, const IndustryProfile& profile)
{
    std::vector<std::string> missing;
    std::vector<std::string> extra;
    for (const auto& [id, w] : profile.weights)
        if (!factor_means.contains(id))
            missing.push_back(id);
    for (const auto& [id, mean] : factor_means)
        if (!profile.weights.contains(id))
            extra.push_back(id);

    if (!missing.empty() || !extra.empty()) {
        std::ostringstream os;
        os << "factor set does not match the weights of NAICS " << profile.naics_code << ":";
        if (!missing.empty()) {
            os << " missing";
            for (const auto& id : missing)
                os << " " << id;
        }
        if (!extra.empty()) {
            os << (missing.empty() ? "" : ";") << " extra";
            for (const auto& id : extra)
                os << " " << id;
        }
        throw ConfigError(os.str());
    }
    if (factor_means.empty())
        throw ConfigError("no location factors to score for NAICS " + profile.naics_code);

    double sum = 0.0;
    for (const auto& [id, mean] : factor_means)
        sum += mean * profile.weights.at(id);
    return sum / static_cast<double>(factor_means.size());
}

}  // namespace

void validate(const LocationFactor& factor)
{
    if (factor.factor_id.empty())
        throw DomainError("location factor has an empty id");
    if (factor.subfactor_ids.empty())
        throw DomainError("location factor '" + factor.factor_id + "' has no subfactors");
    std::set<std::string> seen;
    for (const auto& id : factor.subfactor_ids)
        if (!seen.insert(id).second)
            throw DomainError("location factor '" + factor.factor_id + "' lists subfactor '" + id + "' twice");
}

void validate(const IndustryProfile& profile)
{
    if (!is_naics_code(profile.naics_code))
        throw DomainError("NAICS code '" + profile.naics_code + "' is not a 6-digit code");
    for (const auto& [id, w] : profile.weights)
        if (!std::isfinite(w) || w < 0.0)
            throw DomainError("NAICS " + profile.naics_code + ": weight of factor '" + id + "' must be >= 0");
    auto in_unit = [](double f) { return std::isfinite(f) && f >= 0.0 && f < 1.0; };
    if (!in_unit(profile.logistics_cost_fraction))
        throw DomainError("NAICS " + profile.naics_code + ": logistics cost fraction must lie in [0, 1)");
    if (!in_unit(profile.lead_time_cost_fraction))
        throw DomainError("NAICS " + profile.naics_code + ": lead-time cost fraction must lie in [0, 1)");
    if (profile.logistics_cost_fraction + profile.lead_time_cost_fraction >= 1.0)
        throw DomainError("NAICS " + profile.naics_code + ": logistics plus lead-time cost fraction must be < 1");
}

double location_factor_score(std::span<const SubfactorScore> scores)
{
    if (scores.empty())
        throw DomainError("location factor score needs at least one subfactor");
    double sum = 0.0;
    for (const auto& s : scores)
        sum += s.value;
    return sum / static_cast<double>(scores.size());
}

double domestic_score(const FactorMeans& factor_means, const IndustryProfile& profile)
{
    return weighted_base(factor_means, profile);
}

double offshore_score(const FactorMeans& factor_means, const IndustryProfile& profile, OffshoreAdjustment adjustment)
{
    const double cost = profile.logistics_cost_fraction + profile.lead_time_cost_fraction;
    if (!(cost < 1.0)) {
        std::ostringstream os;
        os << "NAICS " << profile.naics_code << ": L_c + C_L = " << cost << " must be < 1";
        throw DomainError(os.str());
    }
    const double base = weighted_base(factor_means, profile);
    const double keep = 1.0 - cost;
    return adjustment == OffshoreAdjustment::attenuate ? base * keep : base / keep;
}

double reshoring_index(double us_score, double offshore_score)
{
    if (!(offshore_score > 0.0)) {
        std::ostringstream os;
        os << "reshoring index needs a positive offshore score, got " << offshore_score;
        throw DomainError(os.str());
    }
    return (us_score - offshore_score) / offshore_score * 100.0;
}

FactorMeans factor_means_for(std::string_view country, std::span<const IndicatorSeries> indicators,
                             std::span<const LocationFactor> factors, std::vector<std::string>* warnings)
{
    std::unordered_map<std::string, const IndicatorSeries*> by_id;
    for (const auto& s : indicators)
        by_id.emplace(s.indicator_id, &s);

    std::set<std::string> warned;
    FactorMeans means;
    for (const auto& factor : factors) {
        validate(factor);
        std::vector<SubfactorScore> scores;
        scores.reserve(factor.subfactor_ids.size());
        for (const auto& sub : factor.subfactor_ids) {
            const auto it = by_id.find(sub);
            if (it == by_id.end())
                throw ConfigError("location factor '" + factor.factor_id + "' references unknown indicator '" +
                                  sub + "'");
            const IndicatorSeries& series = *it->second;
            const auto value = series.values.find(std::string(country));
            if (value == series.values.end())
                throw ConfigError("indicator '" + sub + "' has no value for country '" + std::string(country) + "'");
            if (warnings && is_degenerate_range(series.observed_min, series.observed_max) &&
                warned.insert(sub).second)
                warnings->push_back("indicator '" + sub +
                                    "': observed range is degenerate; scored at the midpoint 4");
            scores.push_back({sub, normalize_indicator(value->second, series.observed_min, series.observed_max, sub)});
        }
        means[factor.factor_id] = location_factor_score(scores);
    }
    return means;
}

RiEvaluation evaluate(std::span<const IndicatorSeries> indicators, std::span<const LocationFactor> factors,
                      const IndustryProfile& profile, std::string_view domestic_country,
                      std::string_view offshore_country, OffshoreAdjustment adjustment)
{
    validate(profile);

    RiEvaluation out;
    out.naics_code = profile.naics_code;
    out.domestic_country = domestic_country;
    out.offshore_country = offshore_country;
    out.adjustment = adjustment;
    out.domestic_means = factor_means_for(domestic_country, indicators, factors, &out.warnings);
    out.offshore_means = factor_means_for(offshore_country, indicators, factors, nullptr);
    out.domestic_score = domestic_score(out.domestic_means, profile);
    out.offshore_base_score = weighted_base(out.offshore_means, profile);
    out.offshore_score = offshore_score(out.offshore_means, profile, adjustment);
    out.ri_percent = reshoring_index(out.domestic_score, out.offshore_score);
    return out;
}

}  // namespace reshoreval::ri
