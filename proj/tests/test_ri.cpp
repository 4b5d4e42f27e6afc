#include "fixtures.hpp"

#include "reshoreval/error.hpp"
#include "reshoreval/ri.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace reshoreval;
using namespace reshoreval::ri;

namespace {

IndustryProfile profile_with(std::map<std::string, double> weights, double lc = 0.0, double cl = 0.0)
{
    IndustryProfile p;
    p.naics_code = "331523";
    p.weights = std::move(weights);
    p.logistics_cost_fraction = lc;
    p.lead_time_cost_fraction = cl;
    return p;
}

}  // namespace

TEST_CASE("normalize_indicator endpoints and a hand-computed point")
{
    CHECK(normalize_indicator(3.0, 3.0, 9.0) == 1.0);
    CHECK(normalize_indicator(9.0, 3.0, 9.0) == 7.0);
    CHECK(normalize_indicator(2.0, 0.0, 6.0) == doctest::Approx(3.0));
    CHECK(normalize_indicator(-5.0, -10.0, 0.0) == doctest::Approx(4.0));
}

TEST_CASE("normalize_indicator rejects out-of-range and non-finite input")
{
    CHECK_THROWS_AS(normalize_indicator(10.0, 0.0, 6.0), DomainError);
    CHECK_THROWS_AS(normalize_indicator(-0.1, 0.0, 6.0), DomainError);
    CHECK_THROWS_AS(normalize_indicator(NAN, 0.0, 6.0), DomainError);
    CHECK_THROWS_AS(normalize_indicator(1.0, 0.0, INFINITY), DomainError);
    CHECK_THROWS_AS(normalize_indicator(1.0, 6.0, 0.0), DomainError);
}

TEST_CASE("degenerate range maps to the midpoint with a warning")
{
    CHECK(is_degenerate_range(2.0, 2.0));
    CHECK(normalize_indicator(2.0, 2.0, 2.0) == kScaleMidpoint);

    IndicatorSeries s{"flat", {{"US", 5.0}, {"CN", 5.0}}, 5.0, 5.0};
    std::vector<std::string> warnings;
    const auto scores = normalize_series(s, &warnings);
    CHECK(scores.at("US") == 4.0);
    CHECK(scores.at("CN") == 4.0);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings.front().find("flat") != std::string::npos);
}

TEST_CASE("normalize_indicator is bounded and strictly monotone on random ranges")
{
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> u(-1000.0, 1000.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double lo = u(rng), hi = u(rng);
        if (lo > hi)
            std::swap(lo, hi);
        if (hi - lo < 1e-6)
            hi = lo + 1.0;
        double a = lo + unit(rng) * (hi - lo);
        double b = lo + unit(rng) * (hi - lo);
        if (a > b)
            std::swap(a, b);
        const double na = normalize_indicator(a, lo, hi);
        const double nb = normalize_indicator(b, lo, hi);
        REQUIRE(na >= 1.0);
        REQUIRE(nb <= 7.0);
        if (a < b)
            REQUIRE(na < nb);
        REQUIRE(na == doctest::Approx(1.0 + 6.0 * (a - lo) / (hi - lo)).epsilon(1e-12));
    }
}

TEST_CASE("location_factor_score is the plain mean")
{
    const std::vector<SubfactorScore> one{{"a", 5.0}};
    const std::vector<SubfactorScore> pair{{"a", 1.0}, {"b", 7.0}};
    const std::vector<SubfactorScore> three{{"a", 2.0}, {"b", 3.0}, {"c", 4.0}};
    CHECK(location_factor_score(one) == 5.0);
    CHECK(location_factor_score(pair) == 4.0);
    CHECK(location_factor_score(three) == doctest::Approx(3.0));
    CHECK_THROWS_AS(location_factor_score(std::span<const SubfactorScore>{}), DomainError);
}

TEST_CASE("domestic_score weights factor means and divides by the factor count")
{
    CHECK(domestic_score({{"f1", 4.0}}, profile_with({{"f1", 1.0}})) == 4.0);
    CHECK(domestic_score({{"f1", 4.0}, {"f2", 6.0}}, profile_with({{"f1", 1.0}, {"f2", 1.0}})) == doctest::Approx(5.0));
    CHECK(domestic_score({{"f1", 4.0}, {"f2", 6.0}}, profile_with({{"f1", 0.0}, {"f2", 0.0}})) == 0.0);
    // (3*2 + 5*0.5 + 6*1) / 3
    CHECK(domestic_score({{"a", 3.0}, {"b", 5.0}, {"c", 6.0}}, profile_with({{"a", 2.0}, {"b", 0.5}, {"c", 1.0}})) ==
          doctest::Approx(14.5 / 3.0));
}

TEST_CASE("domestic_score rejects mismatched factor sets")
{
    CHECK_THROWS_AS(domestic_score({{"f1", 4.0}}, profile_with({{"f1", 1.0}, {"f2", 1.0}})), ConfigError);
    CHECK_THROWS_AS(domestic_score({{"f1", 4.0}, {"f3", 2.0}}, profile_with({{"f1", 1.0}})), ConfigError);
}

TEST_CASE("offshore_score adjustment modes")
{
    const FactorMeans means{{"f", 5.0}};
    CHECK(offshore_score(means, profile_with({{"f", 1.0}}), OffshoreAdjustment::attenuate) == 5.0);
    CHECK(offshore_score(means, profile_with({{"f", 1.0}}), OffshoreAdjustment::literal_divide) == 5.0);

    const auto p = profile_with({{"f", 1.0}}, 0.09, 0.03);
    CHECK(offshore_score(means, p, OffshoreAdjustment::attenuate) == doctest::Approx(4.40));
    CHECK(offshore_score(means, p, OffshoreAdjustment::literal_divide) == doctest::Approx(5.0 / 0.88));
    CHECK(offshore_score(means, p) == doctest::Approx(4.40));

    CHECK_THROWS_AS(offshore_score(means, profile_with({{"f", 1.0}}, 0.7, 0.3)), DomainError);
}

TEST_CASE("offshore_score ordering and RI direction in the logistics cost")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mean(1.0, 7.0);
    std::uniform_real_distribution<double> frac(0.0, 0.4);
    for (int i = 0; i < 500; ++i) {
        const FactorMeans us{{"a", mean(rng)}, {"b", mean(rng)}};
        const FactorMeans cn{{"a", mean(rng)}, {"b", mean(rng)}};
        const double lc = frac(rng), cl = frac(rng);
        auto p = profile_with({{"a", 1.0}, {"b", 0.5}}, lc, cl);
        const double base = domestic_score(cn, p);
        const double att = offshore_score(cn, p, OffshoreAdjustment::attenuate);
        const double div = offshore_score(cn, p, OffshoreAdjustment::literal_divide);
        REQUIRE(att <= base);
        REQUIRE(base <= div);
        REQUIRE(att == doctest::Approx(base * (1.0 - (lc + cl))));
        REQUIRE(div == doctest::Approx(base / (1.0 - (lc + cl))));

        const double us_score = domestic_score(us, p);
        auto higher = p;
        higher.logistics_cost_fraction = lc + 0.05;
        REQUIRE(reshoring_index(us_score, offshore_score(cn, higher, OffshoreAdjustment::attenuate)) >=
                reshoring_index(us_score, att));
        REQUIRE(reshoring_index(us_score, offshore_score(cn, higher, OffshoreAdjustment::literal_divide)) <=
                reshoring_index(us_score, div));
        higher = p;
        higher.lead_time_cost_fraction = cl + 0.05;
        REQUIRE(reshoring_index(us_score, offshore_score(cn, higher, OffshoreAdjustment::attenuate)) >=
                reshoring_index(us_score, att));
        REQUIRE(reshoring_index(us_score, offshore_score(cn, higher, OffshoreAdjustment::literal_divide)) <=
                reshoring_index(us_score, div));
    }
}

TEST_CASE("reshoring_index examples")
{
    CHECK(reshoring_index(5.0, 5.0) == 0.0);
    CHECK(reshoring_index(5.0, 4.0) == doctest::Approx(25.0));
    CHECK(reshoring_index(4.0, 5.0) == doctest::Approx(-20.0));
    CHECK_THROWS_AS(reshoring_index(4.0, 0.0), DomainError);
    CHECK_THROWS_AS(reshoring_index(4.0, -1.0), DomainError);
}

TEST_CASE("reshoring_index is zero iff equal and signed like the difference")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> s(0.01, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = s(rng);
        const double b = i % 10 == 0 ? a : s(rng);
        const double r = reshoring_index(a, b);
        REQUIRE((r == 0.0) == (a == b));
        REQUIRE((r > 0.0) == (a > b));
        REQUIRE((r < 0.0) == (a < b));
    }
}

TEST_CASE("evaluate chains normalization, factor means and both scores")
{
    const std::vector<IndicatorSeries> indicators{
        {"i1", {{"US", 6.0}, {"CN", 3.0}}, 0.0, 6.0},
        {"i2", {{"US", 2.0}, {"CN", 4.0}}, 0.0, 6.0},
        {"i3", {{"US", 10.0}, {"CN", 0.0}}, 0.0, 10.0},
    };
    const std::vector<LocationFactor> factors{{"fa", "A", {"i1", "i2"}}, {"fb", "B", {"i3"}}};
    const auto p = profile_with({{"fa", 2.0}, {"fb", 1.0}}, 0.1, 0.02);
    const auto e = evaluate(indicators, factors, p, "US", "CN");

    // US: i1 7, i2 3 -> fa 5; i3 7 -> fb 7. CN: i1 4, i2 5 -> fa 4.5; i3 1 -> fb 1.
    CHECK(e.domestic_means.at("fa") == doctest::Approx(5.0));
    CHECK(e.offshore_means.at("fb") == doctest::Approx(1.0));
    const double us = (5.0 * 2 + 7.0 * 1) / 2;
    const double cn_base = (4.5 * 2 + 1.0 * 1) / 2;
    const double cn = cn_base * 0.88;
    CHECK(e.domestic_score == doctest::Approx(us));
    CHECK(e.offshore_base_score == doctest::Approx(cn_base));
    CHECK(e.offshore_score == doctest::Approx(cn));
    CHECK(e.ri_percent == doctest::Approx((us - cn) / cn * 100));
    CHECK(e.warnings.empty());
}

TEST_CASE("profile validation")
{
    CHECK_NOTHROW(validate(profile_with({{"f", 1.0}}, 0.09, 0.03)));
    auto bad = profile_with({{"f", -1.0}});
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = profile_with({{"f", 1.0}}, 0.6, 0.5);
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = profile_with({{"f", 1.0}});
    bad.naics_code = "3315";
    CHECK_THROWS(validate(bad));
}

TEST_CASE("ABC screen with the default policy")
{
    const auto rows = fixtures::abc_screening();
    const auto report = screen_candidates(rows, ScreeningPolicy{});

    std::vector<std::string> labels;
    for (const auto& r : report.shortlist)
        labels.push_back(r.label);
    CHECK(labels == std::vector<std::string>{"Casting", "Stamping", "Forming", "Mounting"});
    CHECK(report.tariff_coverage_percent == doctest::Approx(96.64).epsilon(1e-9));

    REQUIRE(report.excluded.size() == 3);
    CHECK(report.excluded[0].row.label == "Rubber");
    CHECK(describe(report.excluded[0].reason) == "trade deficit not positive");
    CHECK(report.excluded[1].row.label == "Mechanical");
    CHECK(describe(report.excluded[1].reason) == "RI below threshold");
    CHECK(report.excluded[2].row.label == "Plastics");
    CHECK(describe(report.excluded[2].reason) == "trade deficit not positive");
}

TEST_CASE("screen partitions the input and coverage equals a brute-force sum")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ri(10, 40), deficit(-50, 50), logi(3, 15), tariff(0, 30);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<ScreeningRow> rows;
        const int n = static_cast<int>(rng() % 12);
        for (int i = 0; i < n; ++i)
            rows.push_back({"P" + std::to_string(i), "331523", ri(rng), deficit(rng), logi(rng), tariff(rng)});
        const auto rep = screen_candidates(rows, ScreeningPolicy{});
        REQUIRE(rep.shortlist.size() + rep.excluded.size() == rows.size());
        double expected = 0.0;
        for (const auto& r : rows)
            if (r.ri_percent >= 22 && r.trade_deficit_100k > 0 && r.logistics_cost_percent >= 7)
                expected += r.tariff_share_percent;
        REQUIRE(rep.tariff_coverage_percent == doctest::Approx(expected).epsilon(1e-12));
        for (std::size_t i = 1; i < rep.shortlist.size(); ++i)
            REQUIRE(rep.shortlist[i - 1].tariff_share_percent >= rep.shortlist[i].tariff_share_percent);
    }
}

TEST_CASE("screen edge cases")
{
    const auto empty = screen_candidates({}, ScreeningPolicy{});
    CHECK(empty.shortlist.empty());
    CHECK(empty.tariff_coverage_percent == 0.0);

    // thresholds are inclusive
    std::vector<ScreeningRow> rows{{"Edge", "331523", 22, 1, 7, 5}};
    CHECK(screen_candidates(rows, ScreeningPolicy{}).shortlist.size() == 1);
    rows[0].trade_deficit_100k = 0;
    CHECK(screen_candidates(rows, ScreeningPolicy{}).excluded.front().reason == ExclusionReason::deficit_not_positive);
    rows[0].trade_deficit_100k = 1;
    rows[0].logistics_cost_percent = 6.99;
    CHECK(screen_candidates(rows, ScreeningPolicy{}).excluded.front().reason ==
          ExclusionReason::logistics_below_threshold);

    ScreeningPolicy lenient;
    lenient.require_positive_deficit = false;
    const auto r = screen_candidates(fixtures::abc_screening(), lenient);
    CHECK(r.shortlist.size() == 6);  // only Mechanical fails (RI 20)

    std::vector<ScreeningRow> dup{{"A", "331523", 30, 1, 9, 1}, {"A", "331523", 30, 1, 9, 1}};
    CHECK_THROWS_AS(screen_candidates(dup, ScreeningPolicy{}), InputError);
}

TEST_CASE("rank ties break by label, other rank keys")
{
    std::vector<ScreeningRow> rows{{"Beta", "331523", 30, 1, 9, 5}, {"Alpha", "331523", 25, 1, 9, 5}};
    auto rep = screen_candidates(rows, ScreeningPolicy{});
    CHECK(rep.shortlist[0].label == "Alpha");

    ScreeningPolicy by_ri;
    by_ri.rank_key = RankKey::ri;
    const auto t2 = fixtures::abc_screening();
    rep = screen_candidates(t2, by_ri);
    std::vector<std::string> labels;
    for (const auto& r : rep.shortlist)
        labels.push_back(r.label);
    CHECK(labels == std::vector<std::string>{"Stamping", "Mounting", "Casting", "Forming"});

    ScreeningPolicy composite;
    composite.rank_key = RankKey::composite;
    rep = screen_candidates(t2, composite);
    REQUIRE(rep.shortlist.size() == 4);
    // hand-scaled over the shortlist: Stamping 5.50, Casting 4.19, Mounting 2.63, Forming 1.79
    labels.clear();
    for (const auto& r : rep.shortlist)
        labels.push_back(r.label);
    CHECK(labels == std::vector<std::string>{"Stamping", "Casting", "Mounting", "Forming"});
    CHECK(rep.tariff_coverage_percent == doctest::Approx(96.64));

    CHECK(parse_rank_key("composite") == RankKey::composite);
    CHECK_THROWS(parse_rank_key("volume"));
}
