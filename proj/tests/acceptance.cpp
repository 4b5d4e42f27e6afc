// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "fixtures.hpp"

#include "reshoreval/error.hpp"
#include "reshoreval/io/cli.hpp"
#include "reshoreval/io/dataset.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace reshoreval;
namespace fs = std::filesystem;

namespace {

/// Collects failure notes for one criterion.
class Check
{
public:
    void expect(bool ok, const std::string& what)
    {
        ++count_;
        if (!ok)
            failures_.push_back(what);
    }
    void near(double got, double want, double tol, const std::string& what)
    {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want << " +/- " << tol;
        expect(std::abs(got - want) <= tol, os.str());
    }
    bool ok() const { return failures_.empty(); }
    int count() const { return count_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    int count_ = 0;
    std::vector<std::string> failures_;
};

template <class F>
bool criterion(int id, const std::string& title, F&& body)
{
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  [" << id << "] " << title << " (" << c.count() << " checks)\n";
    for (const auto& f : c.failures())
        std::cout << "        " << f << '\n';
    return c.ok();
}

// 1 ---------------------------------------------------------------------------

void screen_abc(Check& c)
{
    io::DatasetPaths paths{{"screening", fixtures::abc_dir() / "screening.csv"}};
    const auto bundle = io::load_dataset(paths);
    const auto report = ri::screen_candidates(bundle.screening_rows, ri::ScreeningPolicy{});
    std::vector<std::string> got;
    for (const auto& r : report.shortlist)
        got.push_back(r.label);
    std::vector<std::string> sorted = got;
    std::sort(sorted.begin(), sorted.end());
    c.expect(sorted == std::vector<std::string>{"Casting", "Forming", "Mounting", "Stamping"},
             "shortlist is exactly {Casting, Stamping, Forming, Mounting}");
    c.near(report.tariff_coverage_percent, 96.64, 0.01, "tariff coverage");
}

// 2 ---------------------------------------------------------------------------

void tco_additivity(Check& c)
{
    for (const auto& t : fixtures::tco_tables()) {
        for (const auto* col : {&t.us, &t.cn}) {
            const auto side = col == &t.us ? " US" : " CN";
            const auto r = tco::grand_total(fixtures::scenario(t.product, side, *col));
            c.near(r.pre_freight_total, col->printed_pre, 0.005, t.product + side + " total before freight");
            c.near(r.grand_total, col->printed_grand, 0.005, t.product + side + " grand total");
        }
    }
}

// 3 ---------------------------------------------------------------------------

void tco_advantages(Check& c)
{
    for (const auto& t : fixtures::tco_tables()) {
        const double us_rate = tco::back_solve_rate(t.us.printed_grand, t.us.printed_5yr, 5);
        const double cn_rate = tco::back_solve_rate(t.cn.printed_grand, t.cn.printed_5yr, 5);
        const auto cmp = tco::compare_scenarios(fixtures::scenario(t.product, "US", t.us, us_rate),
                                                fixtures::scenario(t.product, "China", t.cn, cn_rate), 5);
        c.near(cmp.fob_advantage_offshore, t.fob_adv, 0.015, t.product + " FOB advantage");
        c.near(cmp.tco_advantage_domestic_now, t.tco_now, 0.015, t.product + " TCO advantage now");
        c.near(cmp.tco_advantage_domestic_horizon, t.tco_5yr, 0.015, t.product + " TCO advantage after 5 years");
    }
}

// 4 ---------------------------------------------------------------------------

void forecast_round_trip(Check& c)
{
    for (const auto& t : fixtures::tco_tables())
        for (const auto* col : {&t.us, &t.cn}) {
            const double rate = tco::back_solve_rate(col->printed_grand, col->printed_5yr, 5);
            const auto series = tco::forecast_tco(col->printed_grand, rate, 5);
            c.near(series[5], col->printed_5yr, 0.01, t.product + (col == &t.us ? " US" : " CN") + " 5-year value");
        }

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> v(0.01, 500.0);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double now = v(rng), future = v(rng);
        const int years = 1 + static_cast<int>(rng() % 25);
        const double r = tco::back_solve_rate(now, future, years);
        const double got = tco::forecast_tco(now, r, years)[static_cast<std::size_t>(years)];
        worst = std::max(worst, std::abs(got - future) / future);
    }
    c.expect(worst <= 1e-9, "random inverse worst relative error " + std::to_string(worst));
}

// 5 ---------------------------------------------------------------------------

double oracle_percent(double off, double re)
{
    return (off - re) / off * 100.0;
}

void emission_reductions(Check& c)
{
    const auto factors = fixtures::calibration_factors();
    const ghg::EmissionFactorTable table(factors);
    const ghg::GwpSet gwp;
    const auto legs = fixtures::calibration_legs("fixture", 100.0);

    const auto off = ghg::emission_report(legs.offshore, table, gwp);
    const auto re = ghg::emission_report(legs.reshore, table, gwp);
    const auto red = ghg::reduction_report(off, re);

    c.near(*red.per_mode.at(ghg::Mode::road).co2, 64.0, 1.0, "road reduction");
    c.near(*red.per_mode.at(ghg::Mode::sea).co2, 100.0, 1.0, "water reduction");
    c.near(*red.per_gas.co2, 77.0, 1.0, "CO2 reduction");
    c.near(*red.per_gas.ch4, 93.0, 1.0, "CH4 reduction");
    c.near(*red.per_gas.n2o, 88.0, 1.0, "N2O reduction");
    c.near(*red.co2e_percent, 78.0, 1.0, "CO2e reduction");

    // closed form: reduction = 1 - 0.36 * (offshore road share)
    const double shares[] = {0.23 / 0.36, 0.07 / 0.36, 1.0 / 3.0};
    int g = 0;
    for (auto gas : ghg::kGases) {
        const double share = off.per_mode.at(ghg::Mode::road).get(gas) / off.total.get(gas);
        c.near(share, shares[g], 1e-4, std::string("road share of ") + std::string(ghg::to_string(gas)));
        c.near(*red.per_gas.get(gas), (1.0 - 0.36 * shares[g]) * 100.0, 0.01,
               std::string("closed form ") + std::string(ghg::to_string(gas)));
        ++g;
    }

    // brute-force leg sum
    double kg_off[3] = {}, kg_re[3] = {};
    for (const auto& f : factors) {
        const int gi = static_cast<int>(f.gas);
        for (const auto& l : legs.offshore)
            if (l.mode == f.mode)
                kg_off[gi] += l.mass_tonnes * l.distance * f.kg_per_tonne_km;
        for (const auto& l : legs.reshore)
            if (l.mode == f.mode)
                kg_re[gi] += l.mass_tonnes * l.distance * f.kg_per_tonne_km;
    }
    c.near(*red.per_gas.co2, oracle_percent(kg_off[0], kg_re[0]), 1e-9, "CO2 vs leg-sum oracle");
    c.near(*red.per_gas.ch4, oracle_percent(kg_off[1], kg_re[1]), 1e-9, "CH4 vs leg-sum oracle");
    c.near(*red.per_gas.n2o, oracle_percent(kg_off[2], kg_re[2]), 1e-9, "N2O vs leg-sum oracle");
    const double e_off = kg_off[0] / 1000 + kg_off[1] / 1000 * 28 + kg_off[2] / 1000 * 265;
    const double e_re = kg_re[0] / 1000 + kg_re[1] / 1000 * 28 + kg_re[2] / 1000 * 265;
    c.near(*red.co2e_percent, oracle_percent(e_off, e_re), 1e-9, "CO2e vs leg-sum oracle");
}

// 6 ---------------------------------------------------------------------------

std::vector<ghg::TransportLeg> random_legs(std::mt19937_64& rng, std::size_t n, const std::string& tag)
{
    std::uniform_real_distribution<double> mass(0.0, 150.0), dist(0.0, 12000.0);
    std::vector<ghg::TransportLeg> legs;
    for (std::size_t i = 0; i < n; ++i)
        legs.push_back({tag + std::to_string(i), rng() % 2 ? ghg::Mode::road : ghg::Mode::sea, mass(rng), dist(rng),
                        rng() % 2 ? ghg::DistanceUnit::km : ghg::DistanceUnit::mile});
    return legs;
}

void properties(Check& c)
{
    std::mt19937_64 rng(606);

    // normalization bounded and monotone
    std::uniform_real_distribution<double> u(-1e3, 1e3), unit(0.0, 1.0);
    bool bounded = true, monotone = true;
    for (int i = 0; i < 1000; ++i) {
        double lo = u(rng), hi = u(rng);
        if (lo > hi)
            std::swap(lo, hi);
        if (hi - lo < 1e-3)
            hi = lo + 1.0;
        double a = lo + unit(rng) * (hi - lo), b = lo + unit(rng) * (hi - lo);
        if (a > b)
            std::swap(a, b);
        const double na = ri::normalize_indicator(a, lo, hi), nb = ri::normalize_indicator(b, lo, hi);
        bounded = bounded && na >= 1.0 && na <= 7.0 && nb >= 1.0 && nb <= 7.0;
        monotone = monotone && (a == b || na < nb);
    }
    c.expect(bounded, "normalized scores stay in [1, 7]");
    c.expect(monotone, "normalization is strictly monotone");

    // RI zero iff equal, sign of the difference
    std::uniform_real_distribution<double> s(0.01, 10.0);
    bool ri_ok = true;
    for (int i = 0; i < 1000; ++i) {
        const double a = s(rng), b = i % 7 == 0 ? a : s(rng);
        const double r = ri::reshoring_index(a, b);
        ri_ok = ri_ok && ((r == 0.0) == (a == b)) && ((r > 0) == (a > b)) && ((r < 0) == (a < b));
    }
    c.expect(ri_ok, "RI is zero iff scores are equal and signed like their difference");

    const auto factors = fixtures::calibration_factors();
    const ghg::EmissionFactorTable table(factors);

    // linearity in mass
    bool linear = true;
    for (int i = 0; i < 200; ++i) {
        auto legs = random_legs(rng, 1 + rng() % 20, "l");
        const double k = 0.5 + unit(rng) * 9.5;
        const auto base = ghg::mode_totals(legs, table);
        for (auto& l : legs)
            l.mass_tonnes *= k;
        const auto scaled = ghg::mode_totals(legs, table);
        for (auto g : ghg::kGases)
            linear = linear && std::abs(scaled.total.get(g) - k * base.total.get(g)) <=
                                   1e-12 * std::max(1.0, std::abs(k * base.total.get(g)));
    }
    c.expect(linear, "emissions are linear in mass");

    // additivity against a brute-force oracle
    bool additive = true;
    for (int i = 0; i < 300; ++i) {
        const auto legs = random_legs(rng, rng() % 21, "a");
        double kg[2][3] = {};
        for (const auto& l : legs) {
            const double km = l.distance_unit == ghg::DistanceUnit::mile ? l.distance * 1.609344 : l.distance;
            for (const auto& f : factors)
                if (f.mode == l.mode)
                    kg[static_cast<int>(f.mode)][static_cast<int>(f.gas)] += l.mass_tonnes * km * f.kg_per_tonne_km;
        }
        const auto rep = ghg::mode_totals(legs, table);
        for (auto m : ghg::kModes) {
            const auto& gv = rep.per_mode.at(m);
            const auto* want = kg[static_cast<int>(m)];
            const double got[] = {gv.co2_tonnes * 1000.0, gv.ch4_kg, gv.n2o_kg};
            for (int g = 0; g < 3; ++g)
                additive = additive && std::abs(got[g] - want[g]) <= 1e-9 * std::max(1.0, std::abs(want[g]));
        }
    }
    c.expect(additive, "per-mode totals equal a brute-force leg sum (<= 20 legs)");

    // mile / km invariance
    bool invariant = true;
    for (int i = 0; i < 1000; ++i) {
        const double mi = 0.1 + unit(rng) * 8000.0, m = 0.1 + unit(rng) * 300.0;
        const auto mode = i % 2 ? ghg::Mode::road : ghg::Mode::sea;
        const auto a = ghg::leg_emission({"m", mode, m, mi, ghg::DistanceUnit::mile}, table);
        const auto b = ghg::leg_emission({"k", mode, m, mi * 1.609344, ghg::DistanceUnit::km}, table);
        for (auto g : ghg::kGases)
            invariant = invariant && std::abs(a.get(g) - b.get(g)) <= 1e-12 * std::abs(b.get(g));
    }
    c.expect(invariant, "miles and kilometres agree to 1e-12 relative");

    // determinism of the full pipeline report
    const std::vector<std::string> args{"decide", "--data", fixtures::abc_dir().string(), "--format", "json"};
    std::ostringstream o1, o2, e1, e2;
    const int c1 = io::cli_main(args, o1, e1);
    const int c2 = io::cli_main(args, o2, e2);
    c.expect(c1 == 0 && c2 == 0, "decide runs succeed");
    c.expect(!o1.str().empty() && o1.str() == o2.str(), "two pipeline runs are byte-identical");
}

// 7 ---------------------------------------------------------------------------

struct MalformedCase
{
    std::string name;
    std::string command;
    std::string expected;  // file:row:column prefix the diagnostics must contain
    std::vector<fs::path> overlay;
};

std::vector<MalformedCase> malformed_cases(const fs::path& root)
{
    std::vector<MalformedCase> out;
    std::vector<fs::path> dirs;
    for (const auto& e : fs::directory_iterator(root))
        if (e.is_directory())
            dirs.push_back(e.path());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& d : dirs) {
        MalformedCase mc;
        mc.name = d.filename().string();
        std::ifstream expect(d / "expect.txt");
        std::string key, value;
        while (expect >> key >> value) {
            if (key == "command")
                mc.command = value;
            else if (key == "diagnostic")
                mc.expected = value;
        }
        for (const auto& f : fs::directory_iterator(d))
            if (f.path().filename() != "expect.txt")
                mc.overlay.push_back(f.path());
        out.push_back(std::move(mc));
    }
    return out;
}

void robustness(Check& c)
{
    const auto cases = malformed_cases(fixtures::source_dir() / "tests" / "data" / "malformed");
    std::size_t files = 0;
    for (const auto& mc : cases)
        files += mc.overlay.size();
    c.expect(files >= 20, "corpus holds at least 20 malformed files (has " + std::to_string(files) + ")");

    const auto work = fs::temp_directory_path() / "reshoreval_acceptance_malformed";
    for (const auto& mc : cases) {
        fs::remove_all(work);
        fs::create_directories(work);
        for (const auto& e : fs::directory_iterator(fixtures::abc_dir()))
            fs::copy_file(e.path(), work / e.path().filename());
        for (const auto& f : mc.overlay)
            fs::copy_file(f, work / f.filename(), fs::copy_options::overwrite_existing);

        std::ostringstream out, err;
        int code = -1;
        try {
            code = io::cli_main({mc.command, "--data", work.string()}, out, err);
        } catch (const std::exception& e) {
            c.expect(false, mc.name + ": escaped exception " + e.what());
            continue;
        }
        c.expect(code == io::kExitInput, mc.name + ": exit code " + std::to_string(code));
        c.expect(!mc.expected.empty() && err.str().find(mc.expected) != std::string::npos,
                 mc.name + ": expected diagnostic '" + mc.expected + "' in: " + err.str());
    }
    fs::remove_all(work);
}

}  // namespace

int main()
{
    bool ok = true;
    ok &= criterion(1, "ABC screen: shortlist and tariff coverage 96.64 +/- 0.01", screen_abc);
    ok &= criterion(2, "TCO additivity: every total before freight and grand total within 0.005", tco_additivity);
    ok &= criterion(3, "Purchase price difference table: twelve advantage cells within 0.015", tco_advantages);
    ok &= criterion(4, "Forecast round-trip: eight 5-year values within 0.01, inverse to 1e-9", forecast_round_trip);
    ok &= criterion(5, "Emission reductions on the calibration fixture within 1 point", emission_reductions);
    ok &= criterion(6, "Property suites: normalization, RI sign, GHG linearity/additivity/units, determinism",
                    properties);
    ok &= criterion(7, "Robustness: malformed corpus gives file:row:column diagnostics and exit 1", robustness);
    return ok ? 0 : 1;
}
