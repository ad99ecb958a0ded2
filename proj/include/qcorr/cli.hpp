#pragma once

// Command-line front end: flag parsing, dry-run validation and sweep runs
// that write CSV / JSON records plus sidecar reports.

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcorr/scenarios.hpp"

namespace qcorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericError = 3;

struct CliConfig {
    std::string scenario = "ape";
    std::string channel_a;  // required iff scenario == custom
    std::string channel_b;
    double a = 0.4;
    int p_steps = 101;
    double p_min = 0.0;
    double p_max = 1.0;
    std::string bipartitions = "all";
    int grid = 24;
    int refine_iters = 200;
    double refine_tol = 1e-9;
    std::string out = "correlations.csv";
    std::string format = "csv";
    bool oracle_check = false;
    bool events = false;
    std::string measured_side = "b";
    unsigned threads = 0;
    bool validate_only = false;
};

// Throws ConfigError naming the offending flag.
ScenarioConfig to_scenario_config(const CliConfig& cli);

struct ValidationReport {
    std::size_t points = 0;                    // p_steps x |bipartitions|
    std::size_t grid_evaluations_per_point = 0;  // grid^4
    std::size_t refine_per_point = 0;
    std::size_t estimated_evaluations = 0;     // points x (grid^4 + refine)

    nlohmann::json to_json() const;
};

ValidationReport validate(const CliConfig& cli);

// Paths derived from --out: <stem>.config.json, <stem>.events.csv, <stem>.discrepancies.csv.
struct OutputPaths {
    std::filesystem::path records;
    std::filesystem::path config;
    std::filesystem::path events;
    std::filesystem::path discrepancies;
};

OutputPaths output_paths(const CliConfig& cli);

// Fully resolved configuration written to the sidecar file.
nlohmann::json config_to_json(const CliConfig& cli);

// Runs the sweep and writes all outputs. Throws ConfigError / NumericDomainError.
void run(const CliConfig& cli, std::ostream& log);

// Parses argv-style arguments (without the program name) and dispatches.
// Returns the process exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcorr::cli
