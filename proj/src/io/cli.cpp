#include "reshoreval/io/cli.hpp"

#include "reshoreval/error.hpp"
#include "reshoreval/io/dataset.hpp"
#include "reshoreval/io/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;

namespace reshoreval::io {

namespace {

struct Options
{
    std::string data_dir;
    std::string format = "table";
    std::string out_file;

    std::string naics;
    std::string adjustment;
    std::optional<double> min_ri;
    std::optional<double> min_logistics;
    std::optional<int> horizon;
    std::string product;
};

struct Command
{
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

Command files_for(const std::string& name)
{
    using namespace std::string_literals;
    const auto manifest = std::string(dataset::manifest);
    if (name == "ri")
        return {{std::string(dataset::indicators), std::string(dataset::indicator_ranges),
                 std::string(dataset::factors), std::string(dataset::profiles), std::string(dataset::weights)},
                {manifest}};
    if (name == "screen")
        return {{std::string(dataset::screening)}, {manifest}};
    if (name == "tco")
        return {{std::string(dataset::scenarios)}, {manifest, std::string(dataset::cogs_items)}};
    if (name == "ghg")
        return {{std::string(dataset::legs), std::string(dataset::emission_factors)}, {manifest}};
    // decide
    return {{std::string(dataset::screening), std::string(dataset::scenarios), std::string(dataset::legs),
             std::string(dataset::emission_factors)},
            {manifest, std::string(dataset::cogs_items)}};
}

DatasetBundle load_for(const std::string& command, const std::string& dir)
{
    const fs::path root(dir);
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw InputError(std::vector<Diagnostic>{{dir, 0, {}, "data directory not found"}});

    const auto available = discover_dataset(root);
    const auto files = files_for(command);
    std::vector<Diagnostic> missing;
    DatasetPaths selected;
    for (const auto& name : files.required) {
        if (auto it = available.find(name); it != available.end())
            selected.insert(*it);
        else
            missing.push_back({default_file_name(name), 0, {}, "required file not found in " + dir});
    }
    if (!missing.empty())
        throw InputError(std::move(missing));
    for (const auto& name : files.optional)
        if (auto it = available.find(name); it != available.end())
            selected.insert(*it);
    return load_dataset(selected);
}

void emit(const RenderedReport& report, const Options& opt, std::ostream& out)
{
    if (opt.out_file.empty()) {
        out << report.content;
        return;
    }
    std::ofstream file(opt.out_file, std::ios::binary);
    if (!file)
        throw InputError(std::vector<Diagnostic>{{opt.out_file, 0, {}, "cannot open output file for writing"}});
    file << report.content;
    if (!file)
        throw InputError(std::vector<Diagnostic>{{opt.out_file, 0, {}, "write failed"}});
}

ri::ScreeningPolicy policy_for(const DatasetBundle& data, const Options& opt)
{
    auto policy = data.settings.pipeline.screening_policy;
    if (opt.min_ri)
        policy.min_ri_percent = *opt.min_ri;
    if (opt.min_logistics)
        policy.min_logistics_percent = *opt.min_logistics;
    ri::validate(policy);
    return policy;
}

int horizon_for(const DatasetBundle& data, const Options& opt)
{
    const int h = opt.horizon.value_or(data.settings.pipeline.horizon_years);
    if (h < 1)
        throw InputError("--horizon must be at least 1 year");
    return h;
}

void run_ri(const Options& opt, ReportFormat format, std::ostream& out, std::ostream& err)
{
    const auto data = load_for("ri", opt.data_dir);
    const auto adjustment = opt.adjustment.empty() ? data.settings.ri.adjustment : ri::parse_adjustment(opt.adjustment);
    std::vector<ri::RiEvaluation> evaluations;
    for (const auto& profile : data.profiles) {
        if (!opt.naics.empty() && profile.naics_code != opt.naics)
            continue;
        evaluations.push_back(ri::evaluate(data.indicators, data.factors, profile, data.settings.ri.domestic_country,
                                           data.settings.ri.offshore_country, adjustment));
    }
    if (evaluations.empty() && !opt.naics.empty())
        throw InputError(std::vector<Diagnostic>{
            {default_file_name(dataset::profiles), 0, "naics_code", "no profile for NAICS code " + opt.naics}});
    // normalization warnings repeat per industry; report each once
    std::vector<std::string> seen;
    for (const auto& e : evaluations)
        for (const auto& w : e.warnings)
            if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
                seen.push_back(w);
                err << "warning: " << w << '\n';
            }
    emit(render_report(evaluations, format), opt, out);
}

void run_screen(const Options& opt, ReportFormat format, std::ostream& out)
{
    const auto data = load_for("screen", opt.data_dir);
    const auto report = ri::screen_candidates(data.screening_rows, policy_for(data, opt));
    emit(render_report(report, format), opt, out);
}

void run_tco(const Options& opt, ReportFormat format, std::ostream& out)
{
    const auto data = load_for("tco", opt.data_dir);
    const int horizon = horizon_for(data, opt);
    std::vector<TcoProductReport> products;
    for (const auto& [label, pair] : data.scenario_pairs()) {
        if (!opt.product.empty() && label != opt.product)
            continue;
        products.push_back(make_tco_report(pair, horizon));
    }
    if (products.empty() && !opt.product.empty())
        throw InputError(std::vector<Diagnostic>{
            {default_file_name(dataset::scenarios), 0, "product_label", "no scenarios for product " + opt.product}});
    emit(render_report(products, format), opt, out);
}

void run_ghg(const Options& opt, ReportFormat format, std::ostream& out)
{
    const auto data = load_for("ghg", opt.data_dir);
    const auto table = data.factor_table();
    std::vector<GhgProductReport> products;
    for (const auto& [label, legs] : data.leg_pairs()) {
        if (!opt.product.empty() && label != opt.product)
            continue;
        products.push_back(make_ghg_report(label, legs, table, data.settings.gwp));
    }
    if (products.empty() && !opt.product.empty())
        throw InputError(std::vector<Diagnostic>{
            {default_file_name(dataset::legs), 0, "product_label", "no legs for product " + opt.product}});
    emit(render_report(products, format), opt, out);
}

void run_decide(const Options& opt, ReportFormat format, std::ostream& out)
{
    const auto data = load_for("decide", opt.data_dir);
    auto config = data.settings.pipeline;
    config.screening_policy = policy_for(data, opt);
    config.horizon_years = horizon_for(data, opt);
    const auto records = pipeline::run_pipeline(data.pipeline_inputs(), config);
    emit(render_report(records, format), opt, out);
}

void print_input_error(const InputError& e, std::ostream& err)
{
    for (const auto& d : e.diagnostics())
        err << "error: " << d.to_string() << '\n';
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    if (const char* env = std::getenv("RESHOREVAL_DATA"); env && *env)
        opt.data_dir = env;
    else
        opt.data_dir = ".";

    CLI::App app{"Reshoring evaluation: reshoring index, screening, total cost of ownership, transport emissions",
                 "reshoreval"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--data", opt.data_dir, "Directory holding the dataset files (env RESHOREVAL_DATA)");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "table_text", "csv", "json"}));
    app.add_option("--out", opt.out_file, "Write the report to this file instead of stdout");

    auto* ri_cmd = app.add_subcommand("ri", "Reshoring index per NAICS industry");
    ri_cmd->add_option("--naics", opt.naics, "Only this 6-digit NAICS code");
    ri_cmd->add_option("--adjustment", opt.adjustment, "Offshore logistics adjustment")
        ->check(CLI::IsMember({"attenuate", "literal_divide"}));

    auto* screen_cmd = app.add_subcommand("screen", "Screen candidate products and rank the shortlist");
    auto* decide_cmd = app.add_subcommand("decide", "Screen, cost and emissions combined into a recommendation");
    for (auto* cmd : {screen_cmd, decide_cmd}) {
        cmd->add_option("--min-ri", opt.min_ri, "Minimum reshoring index, percent");
        cmd->add_option("--min-logistics", opt.min_logistics, "Minimum logistics cost, percent");
    }

    auto* tco_cmd = app.add_subcommand("tco", "Total cost of ownership, domestic vs offshore");
    for (auto* cmd : {tco_cmd, decide_cmd})
        cmd->add_option("--horizon", opt.horizon, "Forecast horizon in years");
    tco_cmd->add_option("--product", opt.product, "Only this product label");

    auto* ghg_cmd = app.add_subcommand("ghg", "Transport emissions, offshore vs reshored");
    ghg_cmd->add_option("--product", opt.product, "Only this product label");

    if (args.empty()) {
        err << app.help();
        return kExitInput;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInput;
    }

    try {
        const auto format = parse_format(opt.format);
        if (*ri_cmd)
            run_ri(opt, format, out, err);
        else if (*screen_cmd)
            run_screen(opt, format, out);
        else if (*tco_cmd)
            run_tco(opt, format, out);
        else if (*ghg_cmd)
            run_ghg(opt, format, out);
        else
            run_decide(opt, format, out);
        return kExitOk;
    } catch (const InputError& e) {
        print_input_error(e, err);
        return kExitInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace reshoreval::io
