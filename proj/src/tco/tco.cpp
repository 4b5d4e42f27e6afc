#include "reshoreval/tco.hpp"

#include "reshoreval/error.hpp"

#include <cmath>
#include <sstream>

namespace reshoreval::tco {

namespace {

void check_bucket(const char* name, double value)
{
    if (!std::isfinite(value) || value < 0.0) {
        std::ostringstream os;
        os << "cost bucket '" << name << "' must be a finite value >= 0, got " << value;
        throw DomainError(os.str());
    }
}

void check_rate(double rate)
{
    if (!std::isfinite(rate) || rate <= -1.0) {
        std::ostringstream os;
        os << "escalation rate must be > -1, got " << rate;
        throw DomainError(os.str());
    }
}

void check_years(int years)
{
    if (years < 0)
        throw DomainError("forecast horizon must be >= 0 years, got " + std::to_string(years));
}

}  // namespace

void validate(const CostBuckets& b)
{
    check_bucket("fob_price", b.fob_price);
    check_bucket("cogs", b.cogs);
    check_bucket("other_hard", b.other_hard);
    check_bucket("risk", b.risk);
    check_bucket("strategic", b.strategic);
    check_bucket("green", b.green);
}

void validate(const SourcingScenario& s)
{
    validate(s.buckets);
    if (!std::isfinite(s.freight_premium) || s.freight_premium < 0.0) {
        std::ostringstream os;
        os << s.product_label << "/" << s.region_label << ": freight premium must be >= 0, got " << s.freight_premium;
        throw DomainError(os.str());
    }
    check_rate(s.escalation_rate);
    if (!s.cogs_items.empty()) {
        double sum = 0.0;
        for (const auto& item : s.cogs_items) {
            if (!std::isfinite(item.amount) || item.amount < 0.0)
                throw DomainError(s.product_label + "/" + s.region_label + ": cogs item '" + item.name +
                                  "' must be >= 0");
            sum += item.amount;
        }
        if (std::abs(sum - s.buckets.cogs) > kCogsItemTolerance) {
            std::ostringstream os;
            os << s.product_label << "/" << s.region_label << ": cogs items sum to " << sum
               << " but the cogs bucket is " << s.buckets.cogs;
            throw DomainError(os.str());
        }
    }
}

double total_before_freight(const CostBuckets& b)
{
    validate(b);
    return b.fob_price + b.cogs + b.other_hard + b.risk + b.strategic + b.green;
}

TcoResult grand_total(const SourcingScenario& scenario)
{
    return evaluate(scenario, 0);
}

std::vector<double> forecast_tco(double grand_total, double rate, int years)
{
    check_rate(rate);
    check_years(years);
    std::vector<double> series;
    series.reserve(static_cast<std::size_t>(years) + 1);
    for (int t = 0; t <= years; ++t)
        series.push_back(grand_total * std::pow(1.0 + rate, t));
    return series;
}

double back_solve_rate(double now, double future, int years)
{
    if (!(now > 0.0) || !(future > 0.0) || !std::isfinite(now) || !std::isfinite(future)) {
        std::ostringstream os;
        os << "back-solving a rate needs positive amounts, got " << now << " and " << future;
        throw DomainError(os.str());
    }
    if (years < 1)
        throw DomainError("back-solving a rate needs at least one year, got " + std::to_string(years));
    return std::pow(future / now, 1.0 / years) - 1.0;
}

TcoResult evaluate(const SourcingScenario& scenario, int horizon)
{
    validate(scenario);
    TcoResult r;
    r.pre_freight_total = total_before_freight(scenario.buckets);
    r.grand_total = r.pre_freight_total + scenario.freight_premium;
    r.forecast = forecast_tco(r.grand_total, scenario.escalation_rate, horizon);
    return r;
}

TcoComparison compare_scenarios(const SourcingScenario& domestic, const SourcingScenario& offshore, int horizon)
{
    if (domestic.product_label != offshore.product_label)
        throw InputError("cannot compare scenarios of different products ('" + domestic.product_label + "' vs '" +
                         offshore.product_label + "')");
    check_years(horizon);
    const auto dom = evaluate(domestic, horizon);
    const auto off = evaluate(offshore, horizon);

    TcoComparison c;
    c.fob_advantage_offshore = domestic.buckets.fob_price - offshore.buckets.fob_price;
    c.tco_advantage_domestic_now = off.grand_total - dom.grand_total;
    c.tco_advantage_domestic_horizon = off.forecast.back() - dom.forecast.back();
    c.horizon_years = horizon;
    return c;
}

}  // namespace reshoreval::tco
