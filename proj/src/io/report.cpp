#include "reshoreval/io/report.hpp"

#include "reshoreval/error.hpp"
#include "reshoreval/io/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON converters. Every numeric field is written at full precision and
// mirrored as a two-decimal string under "display"; readers ignore "display".

namespace reshoreval::io {
namespace {

void put(json& j, const char* key, double v)
{
    j[key] = v;
    j["display"][key] = format_2dp(v);
}

void put(json& j, const char* key, const std::optional<double>& v)
{
    if (v) {
        put(j, key, *v);
    } else {
        j[key] = nullptr;
        j["display"][key] = "n/a";
    }
}

std::optional<double> get_optional(const json& j, const char* key)
{
    const auto& v = j.at(key);
    if (v.is_null())
        return std::nullopt;
    return v.get<double>();
}

}  // namespace
}  // namespace reshoreval::io

namespace reshoreval::ri {

void to_json(json& j, const ScreeningRow& r)
{
    j = json::object();
    j["label"] = r.label;
    j["naics_code"] = r.naics_code;
    io::put(j, "ri_percent", r.ri_percent);
    io::put(j, "trade_deficit_100k", r.trade_deficit_100k);
    io::put(j, "logistics_cost_percent", r.logistics_cost_percent);
    io::put(j, "tariff_share_percent", r.tariff_share_percent);
}

void from_json(const json& j, ScreeningRow& r)
{
    r.label = j.at("label").get<std::string>();
    r.naics_code = j.at("naics_code").get<std::string>();
    r.ri_percent = j.at("ri_percent").get<double>();
    r.trade_deficit_100k = j.at("trade_deficit_100k").get<double>();
    r.logistics_cost_percent = j.at("logistics_cost_percent").get<double>();
    r.tariff_share_percent = j.at("tariff_share_percent").get<double>();
}

void to_json(json& j, const Exclusion& e)
{
    j = json{{"row", e.row}, {"reason", std::string(describe(e.reason))}};
}

void from_json(const json& j, Exclusion& e)
{
    e.row = j.at("row").get<ScreeningRow>();
    e.reason = parse_exclusion_reason(j.at("reason").get<std::string>());
}

void to_json(json& j, const ScreeningReport& r)
{
    j = json::object();
    j["report"] = "screening";
    j["shortlist"] = r.shortlist;
    j["excluded"] = r.excluded;
    io::put(j, "tariff_coverage_percent", r.tariff_coverage_percent);
}

void from_json(const json& j, ScreeningReport& r)
{
    r.shortlist = j.at("shortlist").get<std::vector<ScreeningRow>>();
    r.excluded = j.at("excluded").get<std::vector<Exclusion>>();
    r.tariff_coverage_percent = j.at("tariff_coverage_percent").get<double>();
}

void to_json(json& j, const RiEvaluation& e)
{
    j = json::object();
    j["naics_code"] = e.naics_code;
    j["domestic_country"] = e.domestic_country;
    j["offshore_country"] = e.offshore_country;
    j["adjustment"] = std::string(to_string(e.adjustment));
    j["domestic_means"] = e.domestic_means;
    j["offshore_means"] = e.offshore_means;
    io::put(j, "domestic_score", e.domestic_score);
    io::put(j, "offshore_base_score", e.offshore_base_score);
    io::put(j, "offshore_score", e.offshore_score);
    io::put(j, "ri_percent", e.ri_percent);
    j["warnings"] = e.warnings;
}

void from_json(const json& j, RiEvaluation& e)
{
    e.naics_code = j.at("naics_code").get<std::string>();
    e.domestic_country = j.at("domestic_country").get<std::string>();
    e.offshore_country = j.at("offshore_country").get<std::string>();
    e.adjustment = parse_adjustment(j.at("adjustment").get<std::string>());
    e.domestic_means = j.at("domestic_means").get<FactorMeans>();
    e.offshore_means = j.at("offshore_means").get<FactorMeans>();
    e.domestic_score = j.at("domestic_score").get<double>();
    e.offshore_base_score = j.at("offshore_base_score").get<double>();
    e.offshore_score = j.at("offshore_score").get<double>();
    e.ri_percent = j.at("ri_percent").get<double>();
    e.warnings = j.at("warnings").get<std::vector<std::string>>();
}

}  // namespace reshoreval::ri

namespace reshoreval::tco {

void to_json(json& j, const CostBuckets& b)
{
    j = json::object();
    io::put(j, "fob_price", b.fob_price);
    io::put(j, "cogs", b.cogs);
    io::put(j, "other_hard", b.other_hard);
    io::put(j, "risk", b.risk);
    io::put(j, "strategic", b.strategic);
    io::put(j, "green", b.green);
}

void from_json(const json& j, CostBuckets& b)
{
    b.fob_price = j.at("fob_price").get<double>();
    b.cogs = j.at("cogs").get<double>();
    b.other_hard = j.at("other_hard").get<double>();
    b.risk = j.at("risk").get<double>();
    b.strategic = j.at("strategic").get<double>();
    b.green = j.at("green").get<double>();
}

void to_json(json& j, const CogsItem& c)
{
    j = json::object();
    j["name"] = c.name;
    io::put(j, "amount", c.amount);
}

void from_json(const json& j, CogsItem& c)
{
    c.name = j.at("name").get<std::string>();
    c.amount = j.at("amount").get<double>();
}

void to_json(json& j, const SourcingScenario& s)
{
    j = json::object();
    j["product_label"] = s.product_label;
    j["region_label"] = s.region_label;
    j["buckets"] = s.buckets;
    io::put(j, "freight_premium", s.freight_premium);
    j["escalation_rate"] = s.escalation_rate;
    j["cogs_items"] = s.cogs_items;
}

void from_json(const json& j, SourcingScenario& s)
{
    s.product_label = j.at("product_label").get<std::string>();
    s.region_label = j.at("region_label").get<std::string>();
    s.buckets = j.at("buckets").get<CostBuckets>();
    s.freight_premium = j.at("freight_premium").get<double>();
    s.escalation_rate = j.at("escalation_rate").get<double>();
    s.cogs_items = j.at("cogs_items").get<std::vector<CogsItem>>();
}

void to_json(json& j, const TcoResult& r)
{
    j = json::object();
    io::put(j, "pre_freight_total", r.pre_freight_total);
    io::put(j, "grand_total", r.grand_total);
    j["forecast"] = r.forecast;
    json shown = json::array();
    for (double v : r.forecast)
        shown.push_back(io::format_2dp(v));
    j["display"]["forecast"] = shown;
}

void from_json(const json& j, TcoResult& r)
{
    r.pre_freight_total = j.at("pre_freight_total").get<double>();
    r.grand_total = j.at("grand_total").get<double>();
    r.forecast = j.at("forecast").get<std::vector<double>>();
}

void to_json(json& j, const TcoComparison& c)
{
    j = json::object();
    io::put(j, "fob_advantage_offshore", c.fob_advantage_offshore);
    io::put(j, "tco_advantage_domestic_now", c.tco_advantage_domestic_now);
    io::put(j, "tco_advantage_domestic_horizon", c.tco_advantage_domestic_horizon);
    j["horizon_years"] = c.horizon_years;
}

void from_json(const json& j, TcoComparison& c)
{
    c.fob_advantage_offshore = j.at("fob_advantage_offshore").get<double>();
    c.tco_advantage_domestic_now = j.at("tco_advantage_domestic_now").get<double>();
    c.tco_advantage_domestic_horizon = j.at("tco_advantage_domestic_horizon").get<double>();
    c.horizon_years = j.at("horizon_years").get<int>();
}

}  // namespace reshoreval::tco

namespace reshoreval::ghg {

void to_json(json& j, const GasVector& g)
{
    j = json::object();
    io::put(j, "co2_tonnes", g.co2_tonnes);
    io::put(j, "ch4_kg", g.ch4_kg);
    io::put(j, "n2o_kg", g.n2o_kg);
}

void from_json(const json& j, GasVector& g)
{
    g.co2_tonnes = j.at("co2_tonnes").get<double>();
    g.ch4_kg = j.at("ch4_kg").get<double>();
    g.n2o_kg = j.at("n2o_kg").get<double>();
}

void to_json(json& j, const GwpSet& g)
{
    j = json{{"ch4", g.ch4}, {"n2o", g.n2o}};
}

void from_json(const json& j, GwpSet& g)
{
    g.ch4 = j.at("ch4").get<double>();
    g.n2o = j.at("n2o").get<double>();
}

void to_json(json& j, const EmissionReport& r)
{
    j = json::object();
    j["per_mode"] = json::object();
    for (const auto& [mode, gases] : r.per_mode)
        j["per_mode"][std::string(to_string(mode))] = gases;
    j["total"] = r.total;
    io::put(j, "co2e_tonnes", r.co2e_tonnes);
    j["gwp"] = r.gwp ? json(*r.gwp) : json(nullptr);
    j["excludes"] = "port handling emissions";
}

void from_json(const json& j, EmissionReport& r)
{
    r.per_mode.clear();
    for (const auto& [mode, gases] : j.at("per_mode").items())
        r.per_mode[parse_mode(mode)] = gases.get<GasVector>();
    r.total = j.at("total").get<GasVector>();
    r.co2e_tonnes = io::get_optional(j, "co2e_tonnes");
    if (j.at("gwp").is_null())
        r.gwp.reset();
    else
        r.gwp = j.at("gwp").get<GwpSet>();
}

void to_json(json& j, const GasPercents& p)
{
    j = json::object();
    io::put(j, "CO2", p.co2);
    io::put(j, "CH4", p.ch4);
    io::put(j, "N2O", p.n2o);
}

void from_json(const json& j, GasPercents& p)
{
    p.co2 = io::get_optional(j, "CO2");
    p.ch4 = io::get_optional(j, "CH4");
    p.n2o = io::get_optional(j, "N2O");
}

void to_json(json& j, const ReductionReport& r)
{
    j = json::object();
    j["per_mode_percent"] = json::object();
    for (const auto& [mode, pct] : r.per_mode)
        j["per_mode_percent"][std::string(to_string(mode))] = pct;
    j["per_gas_percent"] = r.per_gas;
    io::put(j, "co2e_percent", r.co2e_percent);
}

void from_json(const json& j, ReductionReport& r)
{
    r.per_mode.clear();
    for (const auto& [mode, pct] : j.at("per_mode_percent").items())
        r.per_mode[parse_mode(mode)] = pct.get<GasPercents>();
    r.per_gas = j.at("per_gas_percent").get<GasPercents>();
    r.co2e_percent = io::get_optional(j, "co2e_percent");
}

}  // namespace reshoreval::ghg

namespace reshoreval::pipeline {

void to_json(json& j, const DecisionRecord& d)
{
    j = json::object();
    j["product_label"] = d.product_label;
    j["naics_code"] = d.naics_code;
    j["screened"] = d.screened;
    j["reason"] = d.reason;
    io::put(j, "tco_advantage_now", d.tco_advantage_now);
    io::put(j, "tco_advantage_horizon", d.tco_advantage_horizon);
    io::put(j, "ghg_co2e_reduction_percent", d.ghg_co2e_reduction_percent);
    j["recommendation"] = std::string(to_string(d.recommendation));
}

void from_json(const json& j, DecisionRecord& d)
{
    d.product_label = j.at("product_label").get<std::string>();
    d.naics_code = j.at("naics_code").get<std::string>();
    d.screened = j.at("screened").get<bool>();
    d.reason = j.at("reason").get<std::string>();
    d.tco_advantage_now = io::get_optional(j, "tco_advantage_now");
    d.tco_advantage_horizon = io::get_optional(j, "tco_advantage_horizon");
    d.ghg_co2e_reduction_percent = io::get_optional(j, "ghg_co2e_reduction_percent");
    d.recommendation = parse_recommendation(j.at("recommendation").get<std::string>());
}

}  // namespace reshoreval::pipeline

namespace reshoreval::io {

void to_json(json& j, const TcoProductReport& r)
{
    j = json{{"product_label", r.product_label},     {"domestic", r.domestic},
             {"offshore", r.offshore},               {"domestic_result", r.domestic_result},
             {"offshore_result", r.offshore_result}, {"comparison", r.comparison}};
}

void from_json(const json& j, TcoProductReport& r)
{
    r.product_label = j.at("product_label").get<std::string>();
    r.domestic = j.at("domestic").get<tco::SourcingScenario>();
    r.offshore = j.at("offshore").get<tco::SourcingScenario>();
    r.domestic_result = j.at("domestic_result").get<tco::TcoResult>();
    r.offshore_result = j.at("offshore_result").get<tco::TcoResult>();
    r.comparison = j.at("comparison").get<tco::TcoComparison>();
}

void to_json(json& j, const GhgProductReport& r)
{
    j = json{{"product_label", r.product_label},
             {"offshore", r.offshore},
             {"reshore", r.reshore},
             {"reduction", r.reduction}};
}

void from_json(const json& j, GhgProductReport& r)
{
    r.product_label = j.at("product_label").get<std::string>();
    r.offshore = j.at("offshore").get<ghg::EmissionReport>();
    r.reshore = j.at("reshore").get<ghg::EmissionReport>();
    r.reduction = j.at("reduction").get<ghg::ReductionReport>();
}

namespace {

// ---------------------------------------------------------------------------
// Text tables

class TextTable
{
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row)
    {
        row.resize(header_.size());
        rows_.push_back(std::move(row));
    }

    std::string str() const
    {
        std::vector<std::size_t> width(header_.size());
        for (std::size_t c = 0; c < header_.size(); ++c) {
            width[c] = header_[c].size();
            for (const auto& r : rows_)
                width[c] = std::max(width[c], r[c].size());
        }
        std::ostringstream os;
        auto line = [&](const std::vector<std::string>& cells) {
            std::string out;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const auto pad = std::string(width[c] - cells[c].size(), ' ');
                if (c > 0)
                    out += "  ";
                out += c == 0 ? cells[c] + pad : pad + cells[c];
            }
            while (!out.empty() && out.back() == ' ')
                out.pop_back();
            os << out << '\n';
        };
        line(header_);
        std::size_t total = 0;
        for (auto w : width)
            total += w;
        os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
        for (const auto& r : rows_)
            line(r);
        return os.str();
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string money(double v)
{
    return format_2dp(v);
}

std::string pct(const std::optional<double>& v)
{
    return v ? format_2dp(*v) + "%" : "n/a";
}

std::string upper(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

// ---------------------------------------------------------------------------
// CSV writing

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos && (s.empty() || (s.front() != ' ' && s.back() != ' ')))
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

class CsvWriter
{
public:
    void row(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0)
                out_ += ',';
            out_ += csv_field(cells[i]);
        }
        out_ += '\n';
    }
    std::string str() const { return out_; }

private:
    std::string out_;
};

/// Full-precision cell and its display twin.
std::vector<std::string> num_cells(double v)
{
    return {format_exact(v), format_2dp(v)};
}

std::vector<std::string> num_cells(const std::optional<double>& v)
{
    if (!v)
        return {"", "n/a"};
    return num_cells(*v);
}

void append(std::vector<std::string>& row, std::vector<std::string> cells)
{
    row.insert(row.end(), cells.begin(), cells.end());
}

std::vector<std::string> with_display(std::initializer_list<std::string_view> names)
{
    std::vector<std::string> out;
    for (auto n : names) {
        out.emplace_back(n);
        out.push_back(std::string(n) + "_display");
    }
    return out;
}

template <class T>
std::string dump(const T& value)
{
    return json(value).dump(2) + "\n";
}

json parse_document(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid report JSON: ") + e.what());
    }
}

template <class T>
void parse_into(std::string_view text, const char* list_key, T& out)
{
    const auto doc = parse_document(text);
    try {
        if (list_key)
            out = doc.at(list_key).get<T>();
        else
            out = doc.get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed report JSON: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("malformed report JSON: ") + e.what());
    }
}

std::string mode_row_label(ghg::Mode mode)
{
    return mode == ghg::Mode::road ? "Road" : "Water";
}

}  // namespace

ReportFormat parse_format(std::string_view text)
{
    if (text == "table" || text == "table_text")
        return ReportFormat::table_text;
    if (text == "csv")
        return ReportFormat::csv;
    if (text == "json")
        return ReportFormat::json;
    throw InputError("unknown format '" + std::string(text) + "' (allowed: table, csv, json)");
}

std::string_view to_string(ReportFormat format)
{
    switch (format) {
        case ReportFormat::table_text: return "table";
        case ReportFormat::csv: return "csv";
        case ReportFormat::json: return "json";
    }
    return "table";
}

TcoProductReport make_tco_report(const pipeline::ScenarioPair& pair, int horizon)
{
    TcoProductReport r;
    r.product_label = pair.domestic.product_label;
    r.domestic = pair.domestic;
    r.offshore = pair.offshore;
    r.domestic_result = tco::evaluate(pair.domestic, horizon);
    r.offshore_result = tco::evaluate(pair.offshore, horizon);
    r.comparison = tco::compare_scenarios(pair.domestic, pair.offshore, horizon);
    return r;
}

GhgProductReport make_ghg_report(std::string product_label, const pipeline::LegPair& legs,
                                 const ghg::EmissionFactorTable& factors, const ghg::GwpSet& gwp)
{
    GhgProductReport r;
    r.product_label = std::move(product_label);
    r.offshore = ghg::emission_report(legs.offshore, factors, gwp);
    r.reshore = ghg::emission_report(legs.reshore, factors, gwp);
    r.reduction = ghg::reduction_report(r.offshore, r.reshore);
    return r;
}

// ---- screening -------------------------------------------------------------

RenderedReport render_report(const ri::ScreeningReport& report, ReportFormat format)
{
    RenderedReport out{format, {}};
    if (format == ReportFormat::json) {
        out.content = dump(report);
        return out;
    }
    if (format == ReportFormat::csv) {
        CsvWriter w;
        std::vector<std::string> header{"label", "naics_code"};
        append(header, with_display({"ri_percent", "trade_deficit_100k", "logistics_cost_percent",
                                     "tariff_share_percent"}));
        append(header, {"status", "rank", "reason"});
        w.row(header);
        auto emit = [&](const ri::ScreeningRow& r, const std::string& status, const std::string& rank,
                        const std::string& reason) {
            std::vector<std::string> row{r.label, r.naics_code};
            append(row, num_cells(r.ri_percent));
            append(row, num_cells(r.trade_deficit_100k));
            append(row, num_cells(r.logistics_cost_percent));
            append(row, num_cells(r.tariff_share_percent));
            append(row, {status, rank, reason});
            w.row(row);
        };
        for (std::size_t i = 0; i < report.shortlist.size(); ++i)
            emit(report.shortlist[i], "shortlist", std::to_string(i + 1), "");
        for (const auto& e : report.excluded)
            emit(e.row, "excluded", "", std::string(ri::describe(e.reason)));
        std::vector<std::string> total{"shortlist_total", "", "", "", "", "", "", ""};
        append(total, num_cells(report.tariff_coverage_percent));
        append(total, {"coverage", "", ""});
        w.row(total);
        out.content = w.str();
        return out;
    }

    std::ostringstream os;
    os << "RI %, TRADE DEFICIT, AND LOGISTICS COST % AGAINST THE 6-DIGIT NAICS CODE\n\n";
    TextTable t({"Items", "NAICS Code", "RI %", "Trade Deficit 100 K", "Logistics cost %", "Tariff %", "Screen"});
    auto add = [&](const ri::ScreeningRow& r, const std::string& status) {
        t.add({r.label, r.naics_code, format_2dp(r.ri_percent), format_2dp(r.trade_deficit_100k),
               format_2dp(r.logistics_cost_percent), format_2dp(r.tariff_share_percent), status});
    };
    for (std::size_t i = 0; i < report.shortlist.size(); ++i)
        add(report.shortlist[i], "shortlist #" + std::to_string(i + 1));
    for (const auto& e : report.excluded)
        add(e.row, "excluded: " + std::string(ri::describe(e.reason)));
    os << t.str() << '\n';
    os << "Shortlist:";
    for (const auto& r : report.shortlist)
        os << ' ' << r.label;
    os << "\nTariff coverage of shortlist: " << format_2dp(report.tariff_coverage_percent) << "%\n";
    out.content = os.str();
    return out;
}

// ---- reshoring index -------------------------------------------------------

RenderedReport render_report(const std::vector<ri::RiEvaluation>& evaluations, ReportFormat format)
{
    RenderedReport out{format, {}};
    if (format == ReportFormat::json) {
        out.content = dump(json{{"report", "reshoring_index"}, {"evaluations", evaluations}});
        return out;
    }
    if (format == ReportFormat::csv) {
        CsvWriter w;
        std::vector<std::string> header{"naics_code", "domestic_country", "offshore_country", "adjustment"};
        append(header, with_display({"domestic_score", "offshore_base_score", "offshore_score", "ri_percent"}));
        w.row(header);
        for (const auto& e : evaluations) {
            std::vector<std::string> row{e.naics_code, e.domestic_country, e.offshore_country,
                                         std::string(ri::to_string(e.adjustment))};
            append(row, num_cells(e.domestic_score));
            append(row, num_cells(e.offshore_base_score));
            append(row, num_cells(e.offshore_score));
            append(row, num_cells(e.ri_percent));
            w.row(row);
        }
        out.content = w.str();
        return out;
    }

    std::ostringstream os;
    os << "RESHORING INDEX BY NAICS CODE\n\n";
    const std::string dom = evaluations.empty() ? "Domestic" : evaluations.front().domestic_country;
    const std::string off = evaluations.empty() ? "Offshore" : evaluations.front().offshore_country;
    TextTable t({"NAICS Code", dom + " score", off + " base score", off + " adjusted score", "RI %", "Adjustment"});
    for (const auto& e : evaluations)
        t.add({e.naics_code, format_2dp(e.domestic_score), format_2dp(e.offshore_base_score),
               format_2dp(e.offshore_score), format_2dp(e.ri_percent), std::string(ri::to_string(e.adjustment))});
    os << t.str();
    out.content = os.str();
    return out;
}

// ---- total cost of ownership -----------------------------------------------

RenderedReport render_report(const std::vector<TcoProductReport>& products, ReportFormat format)
{
    RenderedReport out{format, {}};
    if (format == ReportFormat::json) {
        out.content = dump(json{{"report", "tco"}, {"products", products}});
        return out;
    }
    if (format == ReportFormat::csv) {
        CsvWriter w;
        std::vector<std::string> header{"product_label", "metric", "region_label"};
        append(header, with_display({"value"}));
        w.row(header);
        auto emit = [&](const std::string& product, const std::string& metric, const std::string& region, double v) {
            std::vector<std::string> row{product, metric, region};
            append(row, num_cells(v));
            w.row(row);
        };
        for (const auto& p : products) {
            for (const auto* side : {&p.domestic, &p.offshore}) {
                const auto& res = side == &p.domestic ? p.domestic_result : p.offshore_result;
                const auto& b = side->buckets;
                emit(p.product_label, "fob_price", side->region_label, b.fob_price);
                emit(p.product_label, "cogs", side->region_label, b.cogs);
                emit(p.product_label, "other_hard", side->region_label, b.other_hard);
                emit(p.product_label, "risk", side->region_label, b.risk);
                emit(p.product_label, "strategic", side->region_label, b.strategic);
                emit(p.product_label, "green", side->region_label, b.green);
                emit(p.product_label, "pre_freight_total", side->region_label, res.pre_freight_total);
                emit(p.product_label, "freight_premium", side->region_label, side->freight_premium);
                emit(p.product_label, "grand_total", side->region_label, res.grand_total);
                emit(p.product_label, "escalation_rate", side->region_label, side->escalation_rate);
                for (std::size_t t = 0; t < res.forecast.size(); ++t)
                    emit(p.product_label, "forecast_year_" + std::to_string(t), side->region_label, res.forecast[t]);
            }
            emit(p.product_label, "fob_advantage_offshore", "", p.comparison.fob_advantage_offshore);
            emit(p.product_label, "tco_advantage_domestic_now", "", p.comparison.tco_advantage_domestic_now);
            emit(p.product_label, "tco_advantage_domestic_horizon", "", p.comparison.tco_advantage_domestic_horizon);
        }
        out.content = w.str();
        return out;
    }

    std::ostringstream os;
    for (const auto& p : products) {
        const auto& d = p.domestic;
        const auto& o = p.offshore;
        os << "TOTAL COST OF OWNERSHIP (TCO) OF " << upper(p.product_label) << " PRODUCTS, IN " << upper(o.region_label)
           << " VS " << upper(d.region_label) << "\n\n";
        TextTable t({"Cost Factor", d.region_label, o.region_label});
        t.add({"FOB price", money(d.buckets.fob_price), money(o.buckets.fob_price)});
        t.add({"Total CoGS", money(d.buckets.cogs), money(o.buckets.cogs)});
        for (const auto* side : {&d, &o})
            for (const auto& item : side->cogs_items)
                t.add({"  " + item.name + " (" + side->region_label + ")",
                       side == &d ? money(item.amount) : "", side == &o ? money(item.amount) : ""});
        t.add({"Total Other Hard Costs", money(d.buckets.other_hard), money(o.buckets.other_hard)});
        t.add({"Total Risk Cost", money(d.buckets.risk), money(o.buckets.risk)});
        t.add({"Total Strategic Cost", money(d.buckets.strategic), money(o.buckets.strategic)});
        t.add({"Total Green Cost", money(d.buckets.green), money(o.buckets.green)});
        t.add({"Total Cost Before Freight Premium", money(p.domestic_result.pre_freight_total),
               money(p.offshore_result.pre_freight_total)});
        t.add({"Freight Premium", money(d.freight_premium), money(o.freight_premium)});
        t.add({"Grand Total Cost of Ownership", money(p.domestic_result.grand_total),
               money(p.offshore_result.grand_total)});
        t.add({"Forecast TCO (" + std::to_string(p.comparison.horizon_years) + " years)",
               money(p.domestic_result.forecast.back()), money(p.offshore_result.forecast.back())});
        os << t.str() << '\n';
    }

    if (!products.empty()) {
        const auto& first = products.front();
        const auto horizon = std::to_string(first.comparison.horizon_years);
        os << "PURCHASE PRICE DIFFERENCE IN " << upper(first.offshore.region_label) << " VS "
           << upper(first.domestic.region_label) << " AFTER TCO ANALYSIS\n\n";
        TextTable t({"Product Name", first.offshore.region_label + " Advantage on FOB Present day (per unit)",
                     first.domestic.region_label + " Advantage on TCO Present Day (per unit)",
                     first.domestic.region_label + " Advantage on TCO after " + horizon + " years (per unit)"});
        for (const auto& p : products)
            t.add({p.product_label, money(p.comparison.fob_advantage_offshore),
                   money(p.comparison.tco_advantage_domestic_now), money(p.comparison.tco_advantage_domestic_horizon)});
        os << t.str();
    }
    out.content = os.str();
    return out;
}

// ---- emissions -------------------------------------------------------------

RenderedReport render_report(const ghg::EmissionReport& report, ReportFormat format)
{
    RenderedReport out{format, {}};
    if (format == ReportFormat::json) {
        out.content = dump(report);
        return out;
    }
    if (format == ReportFormat::csv) {
        CsvWriter w;
        std::vector<std::string> header{"scope"};
        append(header, with_display({"co2_tonnes", "ch4_kg", "n2o_kg", "co2e_tonnes"}));
        w.row(header);
        for (const auto& [mode, g] : report.per_mode) {
            std::vector<std::string> row{std::string(ghg::to_string(mode))};
            append(row, num_cells(g.co2_tonnes));
            append(row, num_cells(g.ch4_kg));
            append(row, num_cells(g.n2o_kg));
            append(row, {"", ""});
            w.row(row);
        }
        std::vector<std::string> row{"total"};
        append(row, num_cells(report.total.co2_tonnes));
        append(row, num_cells(report.total.ch4_kg));
        append(row, num_cells(report.total.n2o_kg));
        append(row, num_cells(report.co2e_tonnes));
        w.row(row);
        out.content = w.str();
        return out;
    }

    std::ostringstream os;
    TextTable t({"Mode of Transport", "Fossil Fuel CO2 (metric tonnes)", "CH4 (kilograms)", "N2O (kilograms)"});
    for (const auto& [mode, g] : report.per_mode)
        t.add({mode_row_label(mode), format_2dp(g.co2_tonnes), format_2dp(g.ch4_kg), format_2dp(g.n2o_kg)});
    t.add({"Total Emissions", format_2dp(report.total.co2_tonnes), format_2dp(report.total.ch4_kg),
           format_2dp(report.total.n2o_kg)});
    os << t.str();
    if (report.co2e_tonnes)
        os << "Total GHG Emission (metric tonnes CO2e): " << format_2dp(*report.co2e_tonnes) << '\n';
    if (report.gwp)
        os << "GWP: CH4 " << format_exact(report.gwp->ch4) << ", N2O " << format_exact(report.gwp->n2o) << '\n';
    os << "Port handling emissions are not included.\n";
    out.content = os.str();
    return out;
}

RenderedReport render_report(const std::vector<GhgProductReport>& products, ReportFormat format)
{
    RenderedReport out{format, {}};
    if (format == ReportFormat::json) {
        out.content = dump(json{{"report", "ghg"}, {"products", products}});
        return out;
    }
    if (format == ReportFormat::csv) {
        CsvWriter w;
        std::vector<std::string> header{"product_label", "scope", "gas"};
        append(header, with_display({"offshore", "reshore", "reduction_percent"}));
        w.row(header);
        for (const auto& p : products) {
            auto emit = [&](const std::string& scope, ghg::Gas gas, const ghg::GasVector& off,
                            const ghg::GasVector& re, const ghg::GasPercents& red) {
                std::vector<std::string> row{p.product_label, scope, std::string(ghg::to_string(gas))};
                append(row, num_cells(off.get(gas)));
                append(row, num_cells(re.get(gas)));
                append(row, num_cells(red.get(gas)));
                w.row(row);
            };
            for (auto mode : ghg::kModes)
                for (auto gas : ghg::kGases)
                    emit(std::string(ghg::to_string(mode)), gas, p.offshore.per_mode.at(mode),
                         p.reshore.per_mode.at(mode), p.reduction.per_mode.at(mode));
            for (auto gas : ghg::kGases)
                emit("total", gas, p.offshore.total, p.reshore.total, p.reduction.per_gas);
            std::vector<std::string> row{p.product_label, "total", "CO2e"};
            append(row, num_cells(p.offshore.co2e_tonnes));
            append(row, num_cells(p.reshore.co2e_tonnes));
            append(row, num_cells(p.reduction.co2e_percent));
            w.row(row);
        }
        out.content = w.str();
        return out;
    }

    std::ostringstream os;
    for (const auto& p : products) {
        os << "TRANSPORT EMISSIONS: " << p.product_label << "\n\nOffshore supply chain\n"
           << render_report(p.offshore, ReportFormat::table_text).content << "\nReshored supply chain\n"
           << render_report(p.reshore, ReportFormat::table_text).content << '\n';
        os << "GREENHOUSE GAS EMISSIONS REDUCED PERCENTAGE FROM OUTSOURCING TO RESHORING DECISION\n\n";
        TextTable t({"Mode of Transport", "Fossil Fuel CO2 (metric tonnes)", "CH4 (kilograms)", "N2O (kilograms)"});
        for (const auto& [mode, red] : p.reduction.per_mode)
            t.add({mode_row_label(mode), pct(red.co2), pct(red.ch4), pct(red.n2o)});
        t.add({"Total Emissions", pct(p.reduction.per_gas.co2), pct(p.reduction.per_gas.ch4),
               pct(p.reduction.per_gas.n2o)});
        t.add({"Total GHG Emission (metric tonnes CO2e)", pct(p.reduction.co2e_percent), "", ""});
        os << t.str() << '\n';
    }
    out.content = os.str();
    return out;
}

// ---- decisions -------------------------------------------------------------

RenderedReport render_report(const std::vector<pipeline::DecisionRecord>& records, ReportFormat format)
{
    RenderedReport out{format, {}};
    if (format == ReportFormat::json) {
        out.content = dump(json{{"report", "decisions"}, {"records", records}});
        return out;
    }
    if (format == ReportFormat::csv) {
        CsvWriter w;
        std::vector<std::string> header{"product_label", "naics_code", "screened"};
        append(header, with_display({"tco_advantage_now", "tco_advantage_horizon", "ghg_co2e_reduction_percent"}));
        append(header, {"recommendation", "reason"});
        w.row(header);
        for (const auto& r : records) {
            std::vector<std::string> row{r.product_label, r.naics_code, r.screened ? "pass" : "fail"};
            append(row, num_cells(r.tco_advantage_now));
            append(row, num_cells(r.tco_advantage_horizon));
            append(row, num_cells(r.ghg_co2e_reduction_percent));
            append(row, {std::string(pipeline::to_string(r.recommendation)), r.reason});
            w.row(row);
        }
        out.content = w.str();
        return out;
    }

    std::ostringstream os;
    os << "RESHORING DECISIONS\n\n";
    TextTable t({"Product", "NAICS Code", "Screen", "TCO advantage now", "TCO advantage horizon",
                 "CO2e reduction", "Recommendation", "Reason"});
    auto opt_money = [](const std::optional<double>& v) { return v ? money(*v) : std::string("n/a"); };
    for (const auto& r : records)
        t.add({r.product_label, r.naics_code, r.screened ? "pass" : "fail", opt_money(r.tco_advantage_now),
               opt_money(r.tco_advantage_horizon), pct(r.ghg_co2e_reduction_percent),
               std::string(pipeline::to_string(r.recommendation)), r.reason});
    os << t.str();
    out.content = os.str();
    return out;
}

// ---- JSON parsing ----------------------------------------------------------

void parse_json_report(std::string_view text, ri::ScreeningReport& out)
{
    parse_into(text, nullptr, out);
}

void parse_json_report(std::string_view text, std::vector<ri::RiEvaluation>& out)
{
    parse_into(text, "evaluations", out);
}

void parse_json_report(std::string_view text, std::vector<TcoProductReport>& out)
{
    parse_into(text, "products", out);
}

void parse_json_report(std::string_view text, ghg::EmissionReport& out)
{
    parse_into(text, nullptr, out);
}

void parse_json_report(std::string_view text, std::vector<GhgProductReport>& out)
{
    parse_into(text, "products", out);
}

void parse_json_report(std::string_view text, std::vector<pipeline::DecisionRecord>& out)
{
    parse_into(text, "records", out);
}

}  // namespace reshoreval::io
