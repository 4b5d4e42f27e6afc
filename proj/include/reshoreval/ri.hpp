#pragma once

// Reshoring Index: indicator normalization onto the 1-7 scale, weighted
// location-factor scores for a domestic and an offshore country, the index
// itself, and the three-criterion candidate screen.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reshoreval::ri {

inline constexpr double kScaleMin = 1.0;
inline constexpr double kScaleMax = 7.0;
inline constexpr double kScaleMidpoint = 4.0;
inline constexpr double kDefaultLeadTimeCostFraction = 0.03;

/// Raw values of one socioeconomic indicator, keyed by country, together with
/// the observed range used for min-max scaling.
struct IndicatorSeries
{
    std::string indicator_id;
    std::map<std::string, double> values;
    double observed_min = 0.0;
    double observed_max = 0.0;

    bool operator==(const IndicatorSeries&) const = default;
};

struct SubfactorScore
{
    std::string subfactor_id;
    double value = kScaleMin;
};

/// A location factor and the ordered subfactors (indicator ids) that feed it.
struct LocationFactor
{
    std::string factor_id;
    std::string name;
    std::vector<std::string> subfactor_ids;

    bool operator==(const LocationFactor&) const = default;
};

/// Per-industry factor weights plus the logistics adjustment of the offshore score.
struct IndustryProfile
{
    std::string naics_code;
    std::map<std::string, double> weights;
    double logistics_cost_fraction = 0.0;                       // L_c
    double lead_time_cost_fraction = kDefaultLeadTimeCostFraction;  // C_L

    bool operator==(const IndustryProfile&) const = default;
};

/// How the offshore score applies (1 - (L_c + C_L)).
enum class OffshoreAdjustment
{
    attenuate,       // multiply: higher logistics cost lowers the offshore score
    literal_divide,  // divide, as the formula is printed
};

std::string_view to_string(OffshoreAdjustment adjustment);
OffshoreAdjustment parse_adjustment(std::string_view text);

void validate(const IndicatorSeries& series);
void validate(const LocationFactor& factor);
void validate(const IndustryProfile& profile);

bool is_degenerate_range(double min, double max);

/// Min-max scaling of `raw` onto [1, 7]. A zero-width range maps to the
/// midpoint 4. Throws DomainError (mentioning `indicator_id`) when raw lies
/// outside [min, max] or any argument is not finite.
double normalize_indicator(double raw, double min, double max, std::string_view indicator_id = {});

/// Normalized score of every country in the series. Appends a warning when the
/// observed range is degenerate.
std::map<std::string, double> normalize_series(const IndicatorSeries& series,
                                               std::vector<std::string>* warnings = nullptr);

/// Mean of the subfactor scores. Throws DomainError on an empty list.
double location_factor_score(std::span<const SubfactorScore> scores);

using FactorMeans = std::map<std::string, double>;

/// sum_j(mean_j * W_j) / m. Throws ConfigError if the factor keys differ from
/// the profile's weight keys.
double domestic_score(const FactorMeans& factor_means, const IndustryProfile& profile);

/// Domestic-style weighted score of the offshore country, adjusted by
/// (1 - (L_c + C_L)). Throws DomainError when L_c + C_L >= 1.
double offshore_score(const FactorMeans& factor_means, const IndustryProfile& profile,
                      OffshoreAdjustment adjustment = OffshoreAdjustment::attenuate);

/// (us - offshore) / offshore * 100. Throws DomainError when offshore <= 0.
double reshoring_index(double us_score, double offshore_score);

/// Mean normalized score per location factor for one country.
FactorMeans factor_means_for(std::string_view country, std::span<const IndicatorSeries> indicators,
                             std::span<const LocationFactor> factors,
                             std::vector<std::string>* warnings = nullptr);

struct RiEvaluation
{
    std::string naics_code;
    std::string domestic_country;
    std::string offshore_country;
    OffshoreAdjustment adjustment = OffshoreAdjustment::attenuate;
    FactorMeans domestic_means;
    FactorMeans offshore_means;
    double domestic_score = 0.0;
    double offshore_base_score = 0.0;  // before the logistics adjustment
    double offshore_score = 0.0;
    double ri_percent = 0.0;
    std::vector<std::string> warnings;

    bool operator==(const RiEvaluation&) const = default;
};

/// Runs normalization, factor means, both country scores and the index for one industry.
RiEvaluation evaluate(std::span<const IndicatorSeries> indicators, std::span<const LocationFactor> factors,
                      const IndustryProfile& profile, std::string_view domestic_country,
                      std::string_view offshore_country,
                      OffshoreAdjustment adjustment = OffshoreAdjustment::attenuate);

// ---------------------------------------------------------------------------
// Screening

struct ScreeningRow
{
    std::string label;
    std::string naics_code;
    double ri_percent = 0.0;
    double trade_deficit_100k = 0.0;  // positive: imports exceed exports
    double logistics_cost_percent = 0.0;
    double tariff_share_percent = 0.0;

    bool operator==(const ScreeningRow&) const = default;
};

enum class RankKey
{
    tariff_share,
    ri,
    composite,  // mean of the 1-7 scaled RI, deficit and logistics cost over the shortlist
};

std::string_view to_string(RankKey key);
RankKey parse_rank_key(std::string_view text);

struct ScreeningPolicy
{
    double min_ri_percent = 22.0;
    double min_logistics_percent = 7.0;
    bool require_positive_deficit = true;
    RankKey rank_key = RankKey::tariff_share;

    bool operator==(const ScreeningPolicy&) const = default;
};

void validate(const ScreeningPolicy& policy);

/// Screen criteria in evaluation order; an excluded row reports the first one it fails.
enum class ExclusionReason
{
    ri_below_threshold,
    deficit_not_positive,
    logistics_below_threshold,
};

std::string_view describe(ExclusionReason reason);
ExclusionReason parse_exclusion_reason(std::string_view text);

struct Exclusion
{
    ScreeningRow row;
    ExclusionReason reason = ExclusionReason::ri_below_threshold;

    bool operator==(const Exclusion&) const = default;
};

struct ScreeningReport
{
    std::vector<ScreeningRow> shortlist;  // ranked, best first
    std::vector<Exclusion> excluded;      // input order
    double tariff_coverage_percent = 0.0;

    bool operator==(const ScreeningReport&) const = default;
};

/// Thresholds are inclusive (ri >= min_ri, logistics >= min_logistics); a
/// positive deficit means strictly > 0. Ties on the rank key break by label.
/// Throws InputError on duplicate labels.
ScreeningReport screen_candidates(std::span<const ScreeningRow> rows, const ScreeningPolicy& policy);

}  // namespace reshoreval::ri
