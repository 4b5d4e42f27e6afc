#pragma once

// Total cost of ownership: six cost buckets per sourcing region, a flat
// freight premium, single-rate compound escalation, and domestic-vs-offshore
// comparison.

#include <string>
#include <string_view>
#include <vector>

namespace reshoreval::tco {

/// Per-unit cost buckets. Risk, strategic and green default to zero.
struct CostBuckets
{
    double fob_price = 0.0;
    double cogs = 0.0;  // shipping, packaging, duty/customs, insurance
    double other_hard = 0.0;
    double risk = 0.0;
    double strategic = 0.0;
    double green = 0.0;

    bool operator==(const CostBuckets&) const = default;
};

/// Optional itemization of the cogs bucket.
struct CogsItem
{
    std::string name;
    double amount = 0.0;

    bool operator==(const CogsItem&) const = default;
};

struct SourcingScenario
{
    std::string product_label;
    std::string region_label;
    CostBuckets buckets;
    double freight_premium = 0.0;
    double escalation_rate = 0.0;  // annual fraction, > -1
    std::vector<CogsItem> cogs_items;

    bool operator==(const SourcingScenario&) const = default;
};

struct TcoResult
{
    double pre_freight_total = 0.0;
    double grand_total = 0.0;
    std::vector<double> forecast;  // forecast[0] == grand_total

    bool operator==(const TcoResult&) const = default;
};

struct TcoComparison
{
    double fob_advantage_offshore = 0.0;          // domestic fob - offshore fob
    double tco_advantage_domestic_now = 0.0;      // offshore grand total - domestic grand total
    double tco_advantage_domestic_horizon = 0.0;  // same, at the horizon year
    int horizon_years = 0;

    bool operator==(const TcoComparison&) const = default;
};

/// Absolute tolerance when checking cogs items against the cogs bucket.
inline constexpr double kCogsItemTolerance = 1e-6;

/// Throws DomainError naming the first negative or non-finite bucket.
void validate(const CostBuckets& buckets);
/// Buckets, premium >= 0, rate > -1, and cogs items summing to the cogs bucket.
void validate(const SourcingScenario& scenario);

double total_before_freight(const CostBuckets& buckets);

/// Totals with a one-entry forecast.
TcoResult grand_total(const SourcingScenario& scenario);

/// value[t] = grand_total * (1 + rate)^t for t = 0..years.
std::vector<double> forecast_tco(double grand_total, double rate, int years);

/// (future / now)^(1 / years) - 1.
double back_solve_rate(double now, double future, int years);

/// grand_total() with the forecast extended to `horizon` years.
TcoResult evaluate(const SourcingScenario& scenario, int horizon);

/// Throws InputError when the product labels differ.
TcoComparison compare_scenarios(const SourcingScenario& domestic, const SourcingScenario& offshore, int horizon);

}  // namespace reshoreval::tco
