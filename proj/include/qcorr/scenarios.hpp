#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/bipartition.hpp"
#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/qmat.hpp"

namespace qcorr {

// APE: amplitude damping on A, phase damping on B.
// ABE: amplitude damping on A, bit flip on B.
// PPE: phase damping on A, phase flip on B.
// Custom: any two catalog channels.
enum class ScenarioKind { APE, ABE, PPE, Custom };

std::string_view to_string(ScenarioKind kind);
ScenarioKind parse_scenario(std::string_view name);

struct ChannelPair {
    ChannelKind a;
    ChannelKind b;
};

// Channels of a named scenario; Custom throws ConfigError.
ChannelPair channels_for(ScenarioKind kind);

// c0 = 1, c1 = c2 = c3 = -a and the derived combinations a_pm = c0 +- c3, b_pm = c1 +- c2.
struct InitialStateParams {
    double a = 0.0;
    double c0 = 1.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;
    double a_plus = 0.0, a_minus = 0.0, b_plus = 0.0, b_minus = 0.0;
};

InitialStateParams initial_params(double a);

// (1/4) sum_i c_i sigma^i (x) sigma^i with c_i = -a; a must lie in (0, 1].
DensityMatrix initial_state(double a);

// Closed-form reduced matrices as printed for APE, ABE and PPE. The matrix
// is returned verbatim; several printed entries are not valid states, so a
// validity report is attached instead of asserting validity.
struct AnalyticReduced {
    CMatrix matrix;
    ValidityReport validity;
};

AnalyticReduced analytic_reduced(ScenarioKind kind, Bipartition pair, double a, double p);

struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::APE;
    std::optional<ChannelKind> channel_a;  // Custom only
    std::optional<ChannelKind> channel_b;
    double a = 0.4;
    std::vector<double> p_grid;
    std::vector<Bipartition> bipartitions{kAllBipartitions.begin(), kAllBipartitions.end()};
    OptimizerSettings optimizer;
    bool oracle_check = false;
    Side measured_side = Side::B;
    unsigned threads = 0;  // 0: hardware concurrency

    // Throws ConfigError.
    void validate() const;
    ChannelPair channels() const;
};

// `steps` uniform points from lo to hi inclusive (steps == 1 gives {lo}).
std::vector<double> uniform_grid(double lo, double hi, int steps);

struct CorrelationRecord {
    ScenarioKind scenario = ScenarioKind::APE;
    double a = 0.0;
    double p = 0.0;
    Bipartition bipartition = Bipartition::AB;
    CorrelationResult result;
    std::optional<double> oracle_max_abs_dev;
};

// One (p, bipartition) point of a sweep.
CorrelationRecord evaluate_point(const ScenarioConfig& config, double p, Bipartition pair);

// Records ordered p-major, bipartition-minor (in config order). A numeric
// failure aborts the sweep with a NumericDomainError naming (p, pair).
std::vector<CorrelationRecord> sweep(const ScenarioConfig& config);

struct DiscrepancyRow {
    ScenarioKind scenario = ScenarioKind::APE;
    Bipartition pair = Bipartition::AB;
    double a = 0.0;
    double p = 0.0;
    double max_abs_dev = 0.0;     // printed vs. numerically evolved
    double trace_of_printed = 0.0;
    bool printed_valid = false;
    bool matches = false;         // max_abs_dev <= tolerance
    std::string note;

    bool flagged() const { return !printed_valid || !matches; }
};

inline constexpr double kOracleTolerance = 1e-12;

// Compares every printed matrix of `kind` against the evolved state on the
// given (a, p) grid, one row per (a, p, pair).
std::vector<DiscrepancyRow> discrepancy_report(ScenarioKind kind, const std::vector<double>& a_values,
                                               const std::vector<double>& p_grid);

}  // namespace qcorr
