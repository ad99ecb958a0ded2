#include "qcorr/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qcorr/errors.hpp"
#include "qcorr/events.hpp"
#include "qcorr/records_io.hpp"

namespace qcorr::cli {

namespace {

std::vector<Bipartition> parse_bipartition_list(const std::string& text) {
    if (text == "all" || text == "ALL") return {kAllBipartitions.begin(), kAllBipartitions.end()};
    std::vector<Bipartition> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(parse_bipartition(item));
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("--bipartitions: ") + e.what());
        }
    }
    if (out.empty()) throw ConfigError("--bipartitions: no bipartition given");
    return out;
}

template <class F>
auto flag_context(const char* flag, F&& f) {
    try {
        return f();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(flag) + ": " + e.what());
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw ConfigError("--out: cannot write '" + path.string() + "'");
    return os;
}

}  // namespace

ScenarioConfig to_scenario_config(const CliConfig& cli) {
    ScenarioConfig sc;
    sc.scenario = flag_context("--scenario", [&] { return parse_scenario(cli.scenario); });
    if (sc.scenario == ScenarioKind::Custom) {
        if (cli.channel_a.empty() || cli.channel_b.empty()) {
            throw ConfigError("--channel-a/--channel-b: both are required for --scenario custom");
        }
        sc.channel_a = flag_context("--channel-a", [&] { return parse_channel(cli.channel_a); });
        sc.channel_b = flag_context("--channel-b", [&] { return parse_channel(cli.channel_b); });
    } else if (!cli.channel_a.empty() || !cli.channel_b.empty()) {
        throw ConfigError("--channel-a/--channel-b: only allowed with --scenario custom");
    }
    sc.a = cli.a;
    flag_context("--a", [&] { return initial_params(cli.a); });
    sc.p_grid = flag_context("--p-steps/--p-min/--p-max", [&] { return uniform_grid(cli.p_min, cli.p_max, cli.p_steps); });
    sc.bipartitions = parse_bipartition_list(cli.bipartitions);
    sc.optimizer.grid_points_per_angle = cli.grid;
    sc.optimizer.refine_iterations = cli.refine_iters;
    sc.optimizer.refine_tolerance = cli.refine_tol;
    flag_context("--grid/--refine-iters/--refine-tol", [&] {
        sc.optimizer.validate();
        return 0;
    });
    sc.oracle_check = cli.oracle_check;
    sc.measured_side = flag_context("--measured-side", [&] { return parse_side(cli.measured_side); });
    sc.threads = cli.threads;
    if (cli.format != "csv" && cli.format != "json") {
        throw ConfigError("--format: expected csv or json, got '" + cli.format + "'");
    }
    if (cli.events && cli.p_steps < 5) throw ConfigError("--events: needs --p-steps of at least 5");
    if (cli.out.empty()) throw ConfigError("--out: empty path");
    sc.validate();
    return sc;
}

nlohmann::json ValidationReport::to_json() const {
    return {{"points", points},
            {"grid_evaluations_per_point", grid_evaluations_per_point},
            {"refine_iterations_per_point", refine_per_point},
            {"estimated_evaluations", estimated_evaluations}};
}

ValidationReport validate(const CliConfig& cli) {
    const ScenarioConfig sc = to_scenario_config(cli);
    ValidationReport r;
    r.points = sc.p_grid.size() * sc.bipartitions.size();
    const auto g = static_cast<std::size_t>(sc.optimizer.grid_points_per_angle);
    r.grid_evaluations_per_point = g * g * g * g;
    r.refine_per_point = static_cast<std::size_t>(sc.optimizer.refine_iterations);
    r.estimated_evaluations = r.points * (r.grid_evaluations_per_point + r.refine_per_point);
    return r;
}

OutputPaths output_paths(const CliConfig& cli) {
    OutputPaths paths;
    paths.records = cli.out;
    std::filesystem::path stem = paths.records;
    stem.replace_extension();
    auto with_suffix = [&](const char* suffix) { return std::filesystem::path(stem.string() + suffix); };
    paths.config = with_suffix(".config.json");
    paths.events = with_suffix(".events.csv");
    paths.discrepancies = with_suffix(".discrepancies.csv");
    return paths;
}

nlohmann::json config_to_json(const CliConfig& cli) {
    const ScenarioConfig sc = to_scenario_config(cli);
    const ChannelPair ch = sc.channels();
    nlohmann::json pairs = nlohmann::json::array();
    for (Bipartition b : sc.bipartitions) pairs.push_back(to_string(b));
    const Tolerances& tol = default_tolerances();
    return {{"scenario", to_string(sc.scenario)},
            {"channel_a", to_string(ch.a)},
            {"channel_b", to_string(ch.b)},
            {"a", sc.a},
            {"p_steps", cli.p_steps},
            {"p_min", cli.p_min},
            {"p_max", cli.p_max},
            {"bipartitions", pairs},
            {"optimizer",
             {{"grid_points_per_angle", sc.optimizer.grid_points_per_angle},
              {"refine_iterations", sc.optimizer.refine_iterations},
              {"refine_tolerance", sc.optimizer.refine_tolerance}}},
            {"measured_side", to_string(sc.measured_side)},
            {"oracle_check", sc.oracle_check},
            {"events", cli.events},
            {"format", cli.format},
            {"out", cli.out},
            {"tolerances",
             {{"hermitian", tol.hermitian},
              {"trace", tol.trace},
              {"psd_floor", tol.psd_floor},
              {"entropy_cutoff", tol.entropy_cutoff},
              {"measure_clamp", kMeasureClampTolerance},
              {"oracle", kOracleTolerance}}},
            {"csv_header", kRecordCsvHeader}};
}

void run(const CliConfig& cli, std::ostream& log) {
    const ScenarioConfig sc = to_scenario_config(cli);
    const OutputPaths paths = output_paths(cli);

    const std::vector<CorrelationRecord> records = sweep(sc);
    {
        std::ofstream os = open_output(paths.records);
        if (cli.format == "csv") {
            write_records_csv(os, records);
        } else {
            os << nlohmann::json{{"records", records_to_json(records)}}.dump(2) << '\n';
        }
    }
    {
        std::ofstream os = open_output(paths.config);
        os << config_to_json(cli).dump(2) << '\n';
    }
    log << "wrote " << records.size() << " records to " << paths.records.string() << '\n';

    if (cli.events) {
        std::vector<SeriesEvent> events;
        for (Bipartition pair : sc.bipartitions) {
            std::vector<CorrelationRecord> series;
            for (const CorrelationRecord& r : records) {
                if (r.bipartition == pair) series.push_back(r);
            }
            for (std::string_view measure : kMeasureNames) {
                auto reevaluate = [&](double p) { return measure_value(evaluate_point(sc, p, pair).result, measure); };
                for (const Event& e : detect_events(series, measure, reevaluate)) {
                    events.push_back({sc.scenario, sc.a, pair, e});
                }
            }
        }
        std::ofstream os = open_output(paths.events);
        write_events_csv(os, events);
        log << "wrote " << events.size() << " events to " << paths.events.string() << '\n';
    }

    if (cli.oracle_check && sc.scenario != ScenarioKind::Custom) {
        std::vector<DiscrepancyRow> rows;
        for (const DiscrepancyRow& row : discrepancy_report(sc.scenario, {sc.a}, sc.p_grid)) {
            if (std::find(sc.bipartitions.begin(), sc.bipartitions.end(), row.pair) != sc.bipartitions.end()) {
                rows.push_back(row);
            }
        }
        std::ofstream os = open_output(paths.discrepancies);
        write_discrepancies_csv(os, rows);
        const auto flagged = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.flagged(); });
        log << "wrote " << rows.size() << " oracle comparisons (" << flagged << " flagged) to "
            << paths.discrepancies.string() << '\n';
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Correlation dynamics of two qubits coupled to two independent noisy environments", "qcorr"};
    app.add_option("--scenario", cfg.scenario, "ape | abe | ppe | custom")->capture_default_str();
    app.add_option("--channel-a", cfg.channel_a, "channel on qubit A (custom scenario)");
    app.add_option("--channel-b", cfg.channel_b, "channel on qubit B (custom scenario)");
    app.add_option("--a", cfg.a, "initial-state parameter in (0, 1]")->capture_default_str();
    app.add_option("--p-steps", cfg.p_steps, "number of uniform p points")->capture_default_str();
    app.add_option("--p-min", cfg.p_min, "first p value")->capture_default_str();
    app.add_option("--p-max", cfg.p_max, "last p value")->capture_default_str();
    app.add_option("--bipartitions", cfg.bipartitions, "comma list of AB,AEA,BEB,AEB,BEA,EAEB or 'all'")
        ->capture_default_str();
    app.add_option("--grid", cfg.grid, "grid points per measurement angle")->capture_default_str();
    app.add_option("--refine-iters", cfg.refine_iters, "Nelder-Mead iteration budget")->capture_default_str();
    app.add_option("--refine-tol", cfg.refine_tol, "Nelder-Mead value-spread tolerance")->capture_default_str();
    app.add_option("--out", cfg.out, "records output path")->capture_default_str();
    app.add_option("--format", cfg.format, "csv | json")->capture_default_str();
    app.add_flag("--oracle-check", cfg.oracle_check, "compare against the closed-form reduced matrices");
    app.add_flag("--events", cfg.events, "detect sudden death / revival / sudden change events");
    app.add_option("--measured-side", cfg.measured_side, "side measured for one-sided discord (a | b)")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    app.add_flag("--validate,--dry-run", cfg.validate_only, "check the configuration and print the cost estimate");

    std::vector<const char*> argv{"qcorr"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "qcorr: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        if (cfg.validate_only) {
            out << validate(cfg).to_json().dump(2) << '\n';
        } else {
            run(cfg, err);
        }
    } catch (const ConfigError& e) {
        err << "qcorr: configuration error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const NumericDomainError& e) {
        err << "qcorr: numeric error: " << e.what() << '\n';
        return kExitNumericError;
    }
    return kExitOk;
}

}  // namespace qcorr::cli
