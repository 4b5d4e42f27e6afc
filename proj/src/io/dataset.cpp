#include "reshoreval/io/dataset.hpp"

#include "reshoreval/error.hpp"
#include "reshoreval/io/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace reshoreval::io {

namespace {

using json = nlohmann::json;

struct Schema
{
    std::vector<std::string_view> required;
    std::vector<std::string_view> optional;
};

const std::map<std::string, Schema, std::less<>>& schemas()
{
    static const std::map<std::string, Schema, std::less<>> table{
        {std::string(dataset::indicator_ranges), {{"indicator_id", "observed_min", "observed_max"}, {}}},
        {std::string(dataset::indicators), {{"indicator_id", "country", "value"}, {}}},
        {std::string(dataset::factors), {{"factor_id", "name", "subfactor_id"}, {}}},
        {std::string(dataset::profiles), {{"naics_code", "logistics_cost_fraction"}, {"lead_time_cost_fraction"}}},
        {std::string(dataset::weights), {{"naics_code", "factor_id", "weight"}, {}}},
        {std::string(dataset::screening),
         {{"label", "naics_code", "ri_percent", "trade_deficit_100k", "logistics_cost_percent",
           "tariff_share_percent"},
          {}}},
        {std::string(dataset::scenarios),
         {{"product_label", "role", "region_label", "fob_price", "cogs", "other_hard", "freight_premium",
           "escalation_rate"},
          {"risk", "strategic", "green"}}},
        {std::string(dataset::cogs_items), {{"product_label", "role", "item", "amount"}, {}}},
        {std::string(dataset::legs),
         {{"product_label", "scenario", "item_id", "mode", "mass_tonnes", "distance", "distance_unit"}, {}}},
        {std::string(dataset::emission_factors), {{"mode", "gas", "kg_per_tonne_km"}, {}}},
    };
    return table;
}

bool is_naics_code(std::string_view code)
{
    return code.size() == 6 && std::all_of(code.begin(), code.end(), [](char c) { return c >= '0' && c <= '9'; });
}

/// Checks the header of a parsed table against its schema. Returns false when
/// the table cannot be read row by row.
bool check_header(const CsvTable& table, const Schema& schema, std::vector<Diagnostic>& diags)
{
    if (table.header.empty())
        return false;
    bool ok = true;
    std::set<std::string> seen;
    for (const auto& name : table.header) {
        if (!seen.insert(name).second) {
            diags.push_back({table.file, table.header_line, name, "duplicate column"});
            ok = false;
            continue;
        }
        const bool known = std::find(schema.required.begin(), schema.required.end(), name) != schema.required.end() ||
                           std::find(schema.optional.begin(), schema.optional.end(), name) != schema.optional.end();
        if (!known) {
            diags.push_back({table.file, table.header_line, name, "unknown column"});
            ok = false;
        }
    }
    for (auto name : schema.required) {
        if (!table.column(name)) {
            diags.push_back({table.file, table.header_line, std::string(name), "missing required column"});
            ok = false;
        }
    }
    return ok;
}

class RowReader
{
public:
    RowReader(const CsvTable& table, const CsvRow& row, std::vector<Diagnostic>& diags)
        : table_(table), row_(row), diags_(diags)
    {
    }

    std::size_t line() const { return row_.line; }
    bool failed() const { return failed_; }

    void fail(std::string_view column, std::string message)
    {
        diags_.push_back({table_.file, row_.line, std::string(column), std::move(message)});
        failed_ = true;
    }

    /// Cell text; empty cells of required columns are reported.
    std::string text(std::string_view column)
    {
        const auto& v = cell(column);
        if (v.empty())
            fail(column, "empty value");
        return v;
    }

    std::optional<double> number(std::string_view column)
    {
        const auto& v = cell(column);
        if (v.empty()) {
            fail(column, "empty value");
            return std::nullopt;
        }
        return parse(column, v);
    }

    /// Optional column: absent or empty cell yields `fallback`.
    std::optional<double> number_or(std::string_view column, double fallback)
    {
        if (!table_.column(column))
            return fallback;
        const auto& v = cell(column);
        if (v.empty())
            return fallback;
        return parse(column, v);
    }

    std::optional<double> non_negative(std::string_view column)
    {
        auto v = number(column);
        if (v && *v < 0.0) {
            fail(column, "must be >= 0, got " + format_exact(*v));
            return std::nullopt;
        }
        return v;
    }

    template <class Enum>
    std::optional<Enum> choice(std::string_view column, Enum (*parser)(std::string_view))
    {
        const auto v = text(column);
        if (v.empty())
            return std::nullopt;
        try {
            return parser(v);
        } catch (const std::exception& e) {
            fail(column, e.what());
            return std::nullopt;
        }
    }

private:
    const std::string& cell(std::string_view column) const { return row_.fields.at(*table_.column(column)); }

    std::optional<double> parse(std::string_view column, const std::string& v)
    {
        const auto d = parse_decimal(v);
        if (!d)
            fail(column, "'" + v + "' is not a plain decimal number");
        return d;
    }

    const CsvTable& table_;
    const CsvRow& row_;
    std::vector<Diagnostic>& diags_;
    bool failed_ = false;
};

ScenarioRole parse_role(std::string_view text)
{
    if (text == "domestic")
        return ScenarioRole::domestic;
    if (text == "offshore")
        return ScenarioRole::offshore;
    throw DomainError("unknown role '" + std::string(text) + "' (allowed: domestic, offshore)");
}

LegScenario parse_leg_scenario(std::string_view text)
{
    if (text == "offshore")
        return LegScenario::offshore;
    if (text == "reshore")
        return LegScenario::reshore;
    throw DomainError("unknown scenario '" + std::string(text) + "' (allowed: offshore, reshore)");
}

// ---------------------------------------------------------------------------
// Manifest

class ManifestReader
{
public:
    ManifestReader(std::string file, std::vector<Diagnostic>& diags) : file_(std::move(file)), diags_(diags) {}

    void fail(const std::string& path, std::string message) { diags_.push_back({file_, 0, path, std::move(message)}); }

    /// Reports keys of `obj` outside `allowed`.
    void only(const json& obj, const std::string& prefix, std::initializer_list<std::string_view> allowed)
    {
        for (const auto& [key, value] : obj.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                fail(prefix + key, "unknown key");
        }
    }

    const json* object(const json& parent, const std::string& key, const std::string& prefix)
    {
        if (!parent.contains(key))
            return nullptr;
        const auto& v = parent.at(key);
        if (!v.is_object()) {
            fail(prefix + key, "expected an object");
            return nullptr;
        }
        return &v;
    }

    void number(const json& obj, const std::string& key, const std::string& prefix, double& out)
    {
        if (!obj.contains(key))
            return;
        const auto& v = obj.at(key);
        if (!v.is_number() || !std::isfinite(v.get<double>())) {
            fail(prefix + key, "expected a finite number");
            return;
        }
        out = v.get<double>();
    }

    void integer(const json& obj, const std::string& key, const std::string& prefix, int& out)
    {
        if (!obj.contains(key))
            return;
        const auto& v = obj.at(key);
        if (!v.is_number_integer()) {
            fail(prefix + key, "expected an integer");
            return;
        }
        out = v.get<int>();
    }

    void boolean(const json& obj, const std::string& key, const std::string& prefix, bool& out)
    {
        if (!obj.contains(key))
            return;
        const auto& v = obj.at(key);
        if (!v.is_boolean()) {
            fail(prefix + key, "expected true or false");
            return;
        }
        out = v.get<bool>();
    }

    void string(const json& obj, const std::string& key, const std::string& prefix, std::string& out)
    {
        if (!obj.contains(key))
            return;
        const auto& v = obj.at(key);
        if (!v.is_string() || v.get<std::string>().empty()) {
            fail(prefix + key, "expected a non-empty string");
            return;
        }
        out = v.get<std::string>();
    }

private:
    std::string file_;
    std::vector<Diagnostic>& diags_;
};

Settings parse_manifest(const std::string& text, const std::string& file, std::vector<Diagnostic>& diags)
{
    Settings settings;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        diags.push_back({file, 0, {}, std::string("invalid JSON: ") + e.what()});
        return settings;
    }
    ManifestReader m(file, diags);
    if (!root.is_object()) {
        m.fail("", "manifest must be a JSON object");
        return settings;
    }
    m.only(root, "", {"description", "gwp", "screening_policy", "pipeline", "ri"});

    if (const auto* gwp = m.object(root, "gwp", "")) {
        m.only(*gwp, "gwp.", {"ch4", "n2o"});
        m.number(*gwp, "ch4", "gwp.", settings.gwp.ch4);
        m.number(*gwp, "n2o", "gwp.", settings.gwp.n2o);
        try {
            ghg::validate(settings.gwp);
        } catch (const DomainError& e) {
            m.fail("gwp", e.what());
        }
    }
    if (const auto* pol = m.object(root, "screening_policy", "")) {
        auto& p = settings.pipeline.screening_policy;
        m.only(*pol, "screening_policy.",
               {"min_ri_percent", "min_logistics_percent", "require_positive_deficit", "rank_key"});
        m.number(*pol, "min_ri_percent", "screening_policy.", p.min_ri_percent);
        m.number(*pol, "min_logistics_percent", "screening_policy.", p.min_logistics_percent);
        m.boolean(*pol, "require_positive_deficit", "screening_policy.", p.require_positive_deficit);
        std::string key(ri::to_string(p.rank_key));
        m.string(*pol, "rank_key", "screening_policy.", key);
        try {
            p.rank_key = ri::parse_rank_key(key);
        } catch (const DomainError& e) {
            m.fail("screening_policy.rank_key", e.what());
        }
    }
    if (const auto* pipe = m.object(root, "pipeline", "")) {
        auto& c = settings.pipeline;
        m.only(*pipe, "pipeline.", {"horizon_years", "require_ghg_non_negative", "evaluate_excluded"});
        m.integer(*pipe, "horizon_years", "pipeline.", c.horizon_years);
        m.boolean(*pipe, "require_ghg_non_negative", "pipeline.", c.require_ghg_non_negative);
        m.boolean(*pipe, "evaluate_excluded", "pipeline.", c.evaluate_excluded);
        if (c.horizon_years < 1)
            m.fail("pipeline.horizon_years", "must be >= 1");
    }
    if (const auto* ri_obj = m.object(root, "ri", "")) {
        auto& r = settings.ri;
        m.only(*ri_obj, "ri.", {"domestic_country", "offshore_country", "adjustment"});
        m.string(*ri_obj, "domestic_country", "ri.", r.domestic_country);
        m.string(*ri_obj, "offshore_country", "ri.", r.offshore_country);
        std::string adj(ri::to_string(r.adjustment));
        m.string(*ri_obj, "adjustment", "ri.", adj);
        try {
            r.adjustment = ri::parse_adjustment(adj);
        } catch (const DomainError& e) {
            m.fail("ri.adjustment", e.what());
        }
    }
    return settings;
}

// ---------------------------------------------------------------------------
// Loader

struct Located
{
    std::string file;
    std::size_t line = 0;
};

class Loader
{
public:
    explicit Loader(std::vector<Diagnostic>& diags) : diags_(diags) {}

    void add_table(const std::string& name, CsvTable table)
    {
        const auto& schema = schemas().find(name)->second;
        if (!check_header(table, schema, diags_)) {
            if (table.header.empty() && table.rows.empty() &&
                std::none_of(diags_.begin(), diags_.end(), [&](const Diagnostic& d) { return d.file == table.file; }))
                diags_.push_back({table.file, 1, {}, "missing header row"});
            bundle_.loaded.insert(name);
            broken_.insert(name);
            return;
        }
        bundle_.loaded.insert(name);
        files_[name] = table.file;
        if (name == dataset::indicator_ranges)
            read_ranges(table);
        else if (name == dataset::indicators)
            read_indicators(table);
        else if (name == dataset::factors)
            read_factors(table);
        else if (name == dataset::profiles)
            read_profiles(table);
        else if (name == dataset::weights)
            read_weights(table);
        else if (name == dataset::screening)
            read_screening(table);
        else if (name == dataset::scenarios)
            read_scenarios(table);
        else if (name == dataset::cogs_items)
            read_cogs(table);
        else if (name == dataset::legs)
            read_legs(table);
        else if (name == dataset::emission_factors)
            read_emission_factors(table);
    }

    void add_manifest(const std::string& text, const std::string& file)
    {
        bundle_.loaded.insert(std::string(dataset::manifest));
        bundle_.settings = parse_manifest(text, file, diags_);
    }

    DatasetBundle finish()
    {
        cross_check();
        if (!diags_.empty())
            throw InputError(diags_);
        assemble();
        return std::move(bundle_);
    }

private:
    bool usable(std::string_view name) const
    {
        return bundle_.loaded.contains(std::string(name)) && !broken_.contains(std::string(name));
    }

    void diag(const std::string& file, std::size_t line, std::string column, std::string message)
    {
        diags_.push_back({file, line, std::move(column), std::move(message)});
    }

    // ---- per-file readers --------------------------------------------------

    void read_ranges(const CsvTable& t)
    {
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            const auto id = r.text("indicator_id");
            const auto lo = r.number("observed_min");
            const auto hi = r.number("observed_max");
            if (lo && hi && *lo > *hi)
                r.fail("observed_max", "observed maximum " + format_exact(*hi) + " is below minimum " +
                                           format_exact(*lo));
            if (!id.empty() && ranges_.contains(id))
                r.fail("indicator_id", "duplicate indicator '" + id + "' (first on line " +
                                           std::to_string(ranges_.at(id).line) + ")");
            if (r.failed())
                continue;
            ranges_.emplace(id, Range{*lo, *hi, row.line});
            range_order_.push_back(id);
        }
    }

    void read_indicators(const CsvTable& t)
    {
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            auto id = r.text("indicator_id");
            auto country = r.text("country");
            const auto value = r.number("value");
            if (!id.empty() && !country.empty() && !seen.insert({id, country}).second)
                r.fail("country", "duplicate value for indicator '" + id + "' and country '" + country + "'");
            if (r.failed())
                continue;
            values_.push_back({std::move(id), std::move(country), *value, {t.file, row.line}});
        }
    }

    void read_factors(const CsvTable& t)
    {
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            auto id = r.text("factor_id");
            auto name = r.text("name");
            auto sub = r.text("subfactor_id");
            if (r.failed())
                continue;
            auto it = std::find_if(factor_rows_.begin(), factor_rows_.end(),
                                   [&](const FactorRows& f) { return f.factor.factor_id == id; });
            if (it == factor_rows_.end()) {
                factor_rows_.push_back({ri::LocationFactor{id, name, {}}, {}});
                it = std::prev(factor_rows_.end());
            } else if (it->factor.name != name) {
                r.fail("name", "factor '" + id + "' is named '" + it->factor.name + "' on an earlier line");
                continue;
            }
            auto& subs = it->factor.subfactor_ids;
            if (std::find(subs.begin(), subs.end(), sub) != subs.end()) {
                r.fail("subfactor_id", "subfactor '" + sub + "' listed twice for factor '" + id + "'");
                continue;
            }
            subs.push_back(sub);
            it->lines.push_back({t.file, row.line});
        }
    }

    void read_profiles(const CsvTable& t)
    {
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            const auto code = r.text("naics_code");
            const auto lc = r.number("logistics_cost_fraction");
            const auto cl = r.number_or("lead_time_cost_fraction", ri::kDefaultLeadTimeCostFraction);
            if (!code.empty() && !is_naics_code(code))
                r.fail("naics_code", "'" + code + "' is not a 6-digit NAICS code");
            if (lc && (*lc < 0.0 || *lc >= 1.0))
                r.fail("logistics_cost_fraction", "must lie in [0, 1)");
            if (cl && (*cl < 0.0 || *cl >= 1.0))
                r.fail("lead_time_cost_fraction", "must lie in [0, 1)");
            if (lc && cl && !r.failed() && *lc + *cl >= 1.0)
                r.fail("lead_time_cost_fraction", "logistics plus lead-time cost fraction must be < 1");
            if (profile_lines_.contains(code))
                r.fail("naics_code", "duplicate profile for NAICS " + code);
            if (r.failed())
                continue;
            ri::IndustryProfile p;
            p.naics_code = code;
            p.logistics_cost_fraction = *lc;
            p.lead_time_cost_fraction = *cl;
            bundle_.profiles.push_back(std::move(p));
            profile_lines_.emplace(code, Located{t.file, row.line});
        }
    }

    void read_weights(const CsvTable& t)
    {
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            auto code = r.text("naics_code");
            auto factor = r.text("factor_id");
            const auto w = r.non_negative("weight");
            if (!code.empty() && !factor.empty() && !seen.insert({code, factor}).second)
                r.fail("factor_id", "duplicate weight for NAICS " + code + " and factor '" + factor + "'");
            if (r.failed())
                continue;
            weights_.push_back({std::move(code), std::move(factor), *w, {t.file, row.line}});
        }
    }

    void read_screening(const CsvTable& t)
    {
        std::map<std::string, std::size_t> seen;
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            ri::ScreeningRow s;
            s.label = r.text("label");
            s.naics_code = r.text("naics_code");
            const auto ri_pct = r.number("ri_percent");
            const auto deficit = r.number("trade_deficit_100k");
            const auto logistics = r.number("logistics_cost_percent");
            const auto tariff = r.non_negative("tariff_share_percent");
            if (!s.naics_code.empty() && !is_naics_code(s.naics_code))
                r.fail("naics_code", "'" + s.naics_code + "' is not a 6-digit NAICS code");
            if (!s.label.empty()) {
                if (const auto it = seen.find(s.label); it != seen.end())
                    r.fail("label", "duplicate label '" + s.label + "' (first on line " +
                                        std::to_string(it->second) + ")");
                else
                    seen.emplace(s.label, row.line);
            }
            if (r.failed())
                continue;
            s.ri_percent = *ri_pct;
            s.trade_deficit_100k = *deficit;
            s.logistics_cost_percent = *logistics;
            s.tariff_share_percent = *tariff;
            bundle_.screening_rows.push_back(s);
            screening_lines_.emplace(s.label, Located{t.file, row.line});
        }
    }

    void read_scenarios(const CsvTable& t)
    {
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            ScenarioEntry e;
            e.scenario.product_label = r.text("product_label");
            const auto role = r.choice<ScenarioRole>("role", parse_role);
            e.scenario.region_label = r.text("region_label");
            const auto fob = r.non_negative("fob_price");
            const auto cogs = r.non_negative("cogs");
            const auto hard = r.non_negative("other_hard");
            const auto risk = r.number_or("risk", 0.0);
            const auto strategic = r.number_or("strategic", 0.0);
            const auto green = r.number_or("green", 0.0);
            for (auto [col, v] : {std::pair{"risk", risk}, std::pair{"strategic", strategic},
                                  std::pair{"green", green}})
                if (v && *v < 0.0)
                    r.fail(col, "must be >= 0, got " + format_exact(*v));
            const auto premium = r.non_negative("freight_premium");
            const auto rate = r.number("escalation_rate");
            if (rate && *rate <= -1.0)
                r.fail("escalation_rate", "must be > -1");
            if (role) {
                const auto key = std::pair{e.scenario.product_label, *role};
                if (const auto it = scenario_lines_.find(key); it != scenario_lines_.end())
                    r.fail("role", "duplicate " + std::string(to_string(*role)) + " scenario for '" +
                                       e.scenario.product_label + "' (first on line " +
                                       std::to_string(it->second.line) + ")");
            }
            if (r.failed())
                continue;
            e.role = *role;
            e.scenario.buckets = {*fob, *cogs, *hard, *risk, *strategic, *green};
            e.scenario.freight_premium = *premium;
            e.scenario.escalation_rate = *rate;
            scenario_lines_.emplace(std::pair{e.scenario.product_label, e.role}, Located{t.file, row.line});
            bundle_.scenarios.push_back(std::move(e));
        }
    }

    void read_cogs(const CsvTable& t)
    {
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            auto product = r.text("product_label");
            const auto role = r.choice<ScenarioRole>("role", parse_role);
            auto item = r.text("item");
            const auto amount = r.non_negative("amount");
            if (r.failed())
                continue;
            cogs_.push_back({std::move(product), *role, tco::CogsItem{std::move(item), *amount}, {t.file, row.line}});
        }
    }

    void read_legs(const CsvTable& t)
    {
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            LegEntry e;
            e.product_label = r.text("product_label");
            const auto scenario = r.choice<LegScenario>("scenario", parse_leg_scenario);
            e.leg.item_id = r.text("item_id");
            const auto mode = r.choice<ghg::Mode>("mode", ghg::parse_mode);
            const auto mass = r.non_negative("mass_tonnes");
            const auto distance = r.non_negative("distance");
            const auto unit = r.choice<ghg::DistanceUnit>("distance_unit", ghg::parse_distance_unit);
            if (r.failed())
                continue;
            e.scenario = *scenario;
            e.leg.mode = *mode;
            e.leg.mass_tonnes = *mass;
            e.leg.distance = *distance;
            e.leg.distance_unit = *unit;
            leg_lines_.push_back({t.file, row.line});
            bundle_.legs.push_back(std::move(e));
        }
    }

    void read_emission_factors(const CsvTable& t)
    {
        std::map<std::pair<ghg::Mode, ghg::Gas>, std::size_t> seen;
        for (const auto& row : t.rows) {
            RowReader r(t, row, diags_);
            const auto mode = r.choice<ghg::Mode>("mode", ghg::parse_mode);
            const auto gas = r.choice<ghg::Gas>("gas", ghg::parse_gas);
            const auto value = r.non_negative("kg_per_tonne_km");
            if (mode && gas) {
                if (const auto it = seen.find({*mode, *gas}); it != seen.end())
                    r.fail("gas", "duplicate factor for " + std::string(ghg::to_string(*mode)) + "/" +
                                      std::string(ghg::to_string(*gas)) + " (first on line " +
                                      std::to_string(it->second) + ")");
                else
                    seen.emplace(std::pair{*mode, *gas}, row.line);
            }
            if (r.failed())
                continue;
            bundle_.emission_factors.push_back({*mode, *gas, *value});
        }
    }

    // ---- cross references --------------------------------------------------

    void cross_check()
    {
        if (bundle_.has(dataset::indicators) && !bundle_.has(dataset::indicator_ranges))
            diag(files_[std::string(dataset::indicators)], 0, {},
                 "indicator values need indicator_ranges.csv for their observed ranges");

        if (usable(dataset::indicators) && usable(dataset::indicator_ranges)) {
            for (const auto& v : values_) {
                const auto it = ranges_.find(v.id);
                if (it == ranges_.end()) {
                    diag(v.at.file, v.at.line, "indicator_id", "unknown indicator '" + v.id + "'");
                    continue;
                }
                if (v.value < it->second.min || v.value > it->second.max)
                    diag(v.at.file, v.at.line, "value",
                         "value " + format_exact(v.value) + " outside observed range [" +
                             format_exact(it->second.min) + ", " + format_exact(it->second.max) + "]");
            }
        }

        if (usable(dataset::factors) && usable(dataset::indicator_ranges)) {
            for (const auto& f : factor_rows_)
                for (std::size_t i = 0; i < f.factor.subfactor_ids.size(); ++i)
                    if (!ranges_.contains(f.factor.subfactor_ids[i]))
                        diag(f.lines[i].file, f.lines[i].line, "subfactor_id",
                             "unknown indicator '" + f.factor.subfactor_ids[i] + "'");
        }

        if (usable(dataset::weights)) {
            std::set<std::string> factor_ids;
            for (const auto& f : factor_rows_)
                factor_ids.insert(f.factor.factor_id);
            for (const auto& w : weights_) {
                if (usable(dataset::profiles) && !profile_lines_.contains(w.naics))
                    diag(w.at.file, w.at.line, "naics_code", "no profile for NAICS " + w.naics);
                if (usable(dataset::factors) && !factor_ids.contains(w.factor))
                    diag(w.at.file, w.at.line, "factor_id", "unknown factor '" + w.factor + "'");
            }
            if (usable(dataset::profiles) && usable(dataset::factors)) {
                for (const auto& p : bundle_.profiles) {
                    for (const auto& id : factor_ids) {
                        const bool found = std::any_of(weights_.begin(), weights_.end(), [&](const WeightRow& w) {
                            return w.naics == p.naics_code && w.factor == id;
                        });
                        if (!found) {
                            const auto& at = profile_lines_.at(p.naics_code);
                            diag(at.file, at.line, "naics_code",
                                 "no weight for factor '" + id + "' in weights.csv");
                        }
                    }
                }
            }
        }

        if (usable(dataset::screening) && usable(dataset::profiles)) {
            for (const auto& s : bundle_.screening_rows)
                if (!profile_lines_.contains(s.naics_code)) {
                    const auto& at = screening_lines_.at(s.label);
                    diag(at.file, at.line, "naics_code", "no profile for NAICS " + s.naics_code);
                }
        }

        if (usable(dataset::scenarios)) {
            std::set<std::string> products;
            for (const auto& e : bundle_.scenarios)
                products.insert(e.scenario.product_label);
            for (const auto& product : products) {
                for (auto role : {ScenarioRole::domestic, ScenarioRole::offshore}) {
                    if (scenario_lines_.contains({product, role}))
                        continue;
                    const auto other = role == ScenarioRole::domestic ? ScenarioRole::offshore : ScenarioRole::domestic;
                    const auto& at = scenario_lines_.at({product, other});
                    diag(at.file, at.line, "role",
                         "product '" + product + "' has no " + std::string(to_string(role)) + " scenario");
                }
                if (usable(dataset::screening) && !screening_lines_.contains(product)) {
                    for (const auto& [key, at] : scenario_lines_)
                        if (key.first == product)
                            diag(at.file, at.line, "product_label",
                                 "product '" + product + "' is not in screening.csv");
                }
            }
        }

        if (!cogs_.empty() || bundle_.has(dataset::cogs_items)) {
            if (!bundle_.has(dataset::scenarios))
                diag(files_[std::string(dataset::cogs_items)], 0, {}, "cogs items need scenarios.csv");
            else if (usable(dataset::scenarios) && usable(dataset::cogs_items)) {
                std::map<std::pair<std::string, ScenarioRole>, double> sums;
                for (const auto& c : cogs_) {
                    if (!scenario_lines_.contains({c.product, c.role})) {
                        diag(c.at.file, c.at.line, "product_label",
                             "no " + std::string(to_string(c.role)) + " scenario for product '" + c.product + "'");
                        continue;
                    }
                    sums[{c.product, c.role}] += c.item.amount;
                }
                for (const auto& [key, sum] : sums) {
                    const auto it = std::find_if(bundle_.scenarios.begin(), bundle_.scenarios.end(),
                                                 [&](const ScenarioEntry& e) {
                                                     return e.scenario.product_label == key.first && e.role == key.second;
                                                 });
                    if (std::abs(sum - it->scenario.buckets.cogs) > tco::kCogsItemTolerance) {
                        const auto& at = scenario_lines_.at(key);
                        diag(at.file, at.line, "cogs",
                             "cogs items sum to " + format_exact(sum) + " but the cogs bucket is " +
                                 format_exact(it->scenario.buckets.cogs));
                    }
                }
            }
        }

        if (usable(dataset::legs)) {
            std::map<std::string, std::set<LegScenario>> sides;
            std::map<std::string, Located> first_line;
            for (std::size_t i = 0; i < bundle_.legs.size(); ++i) {
                const auto& e = bundle_.legs[i];
                sides[e.product_label].insert(e.scenario);
                first_line.emplace(e.product_label, leg_lines_[i]);
                if (usable(dataset::screening) && !screening_lines_.contains(e.product_label))
                    diag(leg_lines_[i].file, leg_lines_[i].line, "product_label",
                         "product '" + e.product_label + "' is not in screening.csv");
            }
            for (const auto& [product, present] : sides)
                for (auto s : {LegScenario::offshore, LegScenario::reshore})
                    if (!present.contains(s))
                        diag(first_line[product].file, first_line[product].line, "scenario",
                             "product '" + product + "' has no " + std::string(to_string(s)) + " legs");

            if (usable(dataset::emission_factors)) {
                const ghg::EmissionFactorTable table(bundle_.emission_factors);
                for (std::size_t i = 0; i < bundle_.legs.size(); ++i) {
                    const auto mode = bundle_.legs[i].leg.mode;
                    if (!table.covers(mode))
                        diag(leg_lines_[i].file, leg_lines_[i].line, "mode",
                             "emission_factors.csv lacks CO2, CH4 and N2O factors for mode '" +
                                 std::string(ghg::to_string(mode)) + "'");
                }
            }
        }
    }

    void assemble()
    {
        for (const auto& id : range_order_) {
            const auto& range = ranges_.at(id);
            ri::IndicatorSeries s;
            s.indicator_id = id;
            s.observed_min = range.min;
            s.observed_max = range.max;
            for (const auto& v : values_)
                if (v.id == id)
                    s.values.emplace(v.country, v.value);
            bundle_.indicators.push_back(std::move(s));
        }
        for (auto& f : factor_rows_)
            bundle_.factors.push_back(std::move(f.factor));
        for (auto& p : bundle_.profiles)
            for (const auto& w : weights_)
                if (w.naics == p.naics_code)
                    p.weights[w.factor] = w.weight;
        for (const auto& c : cogs_)
            for (auto& e : bundle_.scenarios)
                if (e.scenario.product_label == c.product && e.role == c.role)
                    e.scenario.cogs_items.push_back(c.item);
    }

    struct Range
    {
        double min;
        double max;
        std::size_t line;
    };
    struct ValueRow
    {
        std::string id;
        std::string country;
        double value;
        Located at;
    };
    struct FactorRows
    {
        ri::LocationFactor factor;
        std::vector<Located> lines;  // one per subfactor
    };
    struct WeightRow
    {
        std::string naics;
        std::string factor;
        double weight;
        Located at;
    };
    struct CogsRow
    {
        std::string product;
        ScenarioRole role;
        tco::CogsItem item;
        Located at;
    };

    std::vector<Diagnostic>& diags_;
    DatasetBundle bundle_;
    std::set<std::string> broken_;
    std::map<std::string, std::string> files_;

    std::map<std::string, Range> ranges_;
    std::vector<std::string> range_order_;
    std::vector<ValueRow> values_;
    std::vector<FactorRows> factor_rows_;
    std::map<std::string, Located> profile_lines_;
    std::vector<WeightRow> weights_;
    std::map<std::string, Located> screening_lines_;
    std::map<std::pair<std::string, ScenarioRole>, Located> scenario_lines_;
    std::vector<CogsRow> cogs_;
    std::vector<Located> leg_lines_;
};

std::string read_file(const std::filesystem::path& path, std::vector<Diagnostic>& diags, bool& ok)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        diags.push_back({path.filename().string(), 0, {}, "cannot open " + path.string()});
        ok = false;
        return {};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    ok = true;
    return buf.str();
}

DatasetBundle load(const std::vector<std::tuple<std::string, std::string, std::string>>& inputs,
                   std::vector<Diagnostic>& diags)
{
    Loader loader(diags);
    for (const auto& [name, file, text] : inputs) {
        if (name == dataset::manifest) {
            loader.add_manifest(text, file);
            continue;
        }
        if (!schemas().contains(name)) {
            diags.push_back({file, 0, {}, "unknown dataset '" + name + "'"});
            continue;
        }
        loader.add_table(name, parse_csv(text, file, diags));
    }
    return loader.finish();
}

std::vector<std::tuple<std::string, std::string, std::string>> ordered(
    std::vector<std::tuple<std::string, std::string, std::string>> inputs)
{
    const auto& order = known_datasets();
    auto rank = [&](const std::string& name) {
        const auto it = std::find(order.begin(), order.end(), name);
        return static_cast<std::size_t>(it - order.begin());
    };
    std::stable_sort(inputs.begin(), inputs.end(),
                     [&](const auto& a, const auto& b) { return rank(std::get<0>(a)) < rank(std::get<0>(b)); });
    return inputs;
}

}  // namespace

const std::vector<std::string>& known_datasets()
{
    static const std::vector<std::string> names{
        std::string(dataset::manifest),   std::string(dataset::indicator_ranges), std::string(dataset::indicators),
        std::string(dataset::factors),    std::string(dataset::profiles),         std::string(dataset::weights),
        std::string(dataset::screening),  std::string(dataset::scenarios),        std::string(dataset::cogs_items),
        std::string(dataset::legs),       std::string(dataset::emission_factors),
    };
    return names;
}

std::string default_file_name(std::string_view dataset_name)
{
    return std::string(dataset_name) + (dataset_name == dataset::manifest ? ".json" : ".csv");
}

std::string_view to_string(ScenarioRole role)
{
    return role == ScenarioRole::domestic ? "domestic" : "offshore";
}

std::string_view to_string(LegScenario scenario)
{
    return scenario == LegScenario::offshore ? "offshore" : "reshore";
}

std::map<std::string, pipeline::ScenarioPair> DatasetBundle::scenario_pairs() const
{
    std::map<std::string, pipeline::ScenarioPair> out;
    for (const auto& e : scenarios) {
        auto& pair = out[e.scenario.product_label];
        (e.role == ScenarioRole::domestic ? pair.domestic : pair.offshore) = e.scenario;
    }
    return out;
}

std::map<std::string, pipeline::LegPair> DatasetBundle::leg_pairs() const
{
    std::map<std::string, pipeline::LegPair> out;
    for (const auto& e : legs) {
        auto& pair = out[e.product_label];
        (e.scenario == LegScenario::offshore ? pair.offshore : pair.reshore).push_back(e.leg);
    }
    return out;
}

ghg::EmissionFactorTable DatasetBundle::factor_table() const
{
    return ghg::EmissionFactorTable(emission_factors);
}

pipeline::PipelineInputs DatasetBundle::pipeline_inputs() const
{
    pipeline::PipelineInputs in;
    in.rows = screening_rows;
    in.tco_pairs = scenario_pairs();
    in.ghg_pairs = leg_pairs();
    in.factors = factor_table();
    in.gwp = settings.gwp;
    return in;
}

DatasetPaths discover_dataset(const std::filesystem::path& dir)
{
    DatasetPaths paths;
    for (const auto& name : known_datasets()) {
        const auto p = dir / default_file_name(name);
        std::error_code ec;
        if (std::filesystem::is_regular_file(p, ec))
            paths.emplace(name, p);
    }
    return paths;
}

DatasetBundle load_dataset(const DatasetPaths& paths)
{
    std::vector<Diagnostic> diags;
    std::vector<std::tuple<std::string, std::string, std::string>> inputs;
    for (const auto& [name, path] : paths) {
        bool ok = false;
        auto text = read_file(path, diags, ok);
        if (ok)
            inputs.emplace_back(name, path.filename().string(), std::move(text));
    }
    if (!diags.empty())
        throw InputError(diags);
    return load(ordered(std::move(inputs)), diags);
}

DatasetBundle load_dataset_text(const std::map<std::string, std::string>& texts)
{
    std::vector<Diagnostic> diags;
    std::vector<std::tuple<std::string, std::string, std::string>> inputs;
    for (const auto& [name, text] : texts)
        inputs.emplace_back(name, default_file_name(name), text);
    return load(ordered(std::move(inputs)), diags);
}

}  // namespace reshoreval::io
