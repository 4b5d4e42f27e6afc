#include "reshoreval/error.hpp"
#include "reshoreval/kernels.hpp"
#include "reshoreval/ri.hpp"

#include <cmath>
#include <sstream>

namespace reshoreval::ri {

namespace {

std::string label_for(std::string_view indicator_id)
{
    return indicator_id.empty() ? std::string("indicator") : "indicator '" + std::string(indicator_id) + "'";
}

}  // namespace

bool is_degenerate_range(double min, double max)
{
    return min == max;
}

double normalize_indicator(double raw, double min, double max, std::string_view indicator_id)
{
    if (!std::isfinite(raw) || !std::isfinite(min) || !std::isfinite(max))
        throw DomainError(label_for(indicator_id) + ": non-finite value in normalization");
    if (min > max) {
        std::ostringstream os;
        os << label_for(indicator_id) << ": observed minimum " << min << " exceeds maximum " << max;
        throw DomainError(os.str());
    }
    if (raw < min || raw > max) {
        std::ostringstream os;
        os << label_for(indicator_id) << ": raw score " << raw << " outside observed range [" << min << ", "
           << max << "]";
        throw DomainError(os.str());
    }
    if (is_degenerate_range(min, max))
        return kScaleMidpoint;
    // Same expression as the batch kernels, so scalar and batch results agree bit for bit.
    return 6.0 * ((raw - min) / (max - min)) + 1.0;
}

void validate(const IndicatorSeries& series)
{
    if (series.indicator_id.empty())
        throw DomainError("indicator series has an empty id");
    if (!std::isfinite(series.observed_min) || !std::isfinite(series.observed_max))
        throw DomainError(label_for(series.indicator_id) + ": non-finite observed range");
    if (series.observed_min > series.observed_max) {
        std::ostringstream os;
        os << label_for(series.indicator_id) << ": observed minimum " << series.observed_min
           << " exceeds maximum " << series.observed_max;
        throw DomainError(os.str());
    }
    for (const auto& [country, value] : series.values) {
        if (!std::isfinite(value) || value < series.observed_min || value > series.observed_max) {
            std::ostringstream os;
            os << label_for(series.indicator_id) << ": value " << value << " for " << country
               << " outside observed range [" << series.observed_min << ", " << series.observed_max << "]";
            throw DomainError(os.str());
        }
    }
}

std::map<std::string, double> normalize_series(const IndicatorSeries& series, std::vector<std::string>* warnings)
{
    validate(series);

    std::vector<double> raw;
    raw.reserve(series.values.size());
    for (const auto& [country, value] : series.values)
        raw.push_back(value);
    std::vector<double> scaled(raw.size());
    kernels::parallel::normalize(raw, series.observed_min, series.observed_max, scaled);

    if (warnings && is_degenerate_range(series.observed_min, series.observed_max))
        warnings->push_back(label_for(series.indicator_id) +
                            ": observed range is degenerate; every country scored at the midpoint 4");

    std::map<std::string, double> out;
    std::size_t i = 0;
    for (const auto& [country, value] : series.values)
        out.emplace(country, scaled[i++]);
    return out;
}

std::string_view to_string(OffshoreAdjustment adjustment)
{
    switch (adjustment) {
        case OffshoreAdjustment::attenuate: return "attenuate";
        case OffshoreAdjustment::literal_divide: return "literal_divide";
    }
    return "attenuate";
}

OffshoreAdjustment parse_adjustment(std::string_view text)
{
    if (text == "attenuate")
        return OffshoreAdjustment::attenuate;
    if (text == "literal_divide")
        return OffshoreAdjustment::literal_divide;
    throw DomainError("unknown offshore adjustment '" + std::string(text) +
                      "' (allowed: attenuate, literal_divide)");
}

}  // namespace reshoreval::ri
