#pragma once

// Locates dynamical events along a sweep: entanglement sudden death and
// revival (concurrence crossing a small threshold) and sudden changes
// (kinks) in the other measures.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/scenarios.hpp"

namespace qcorr {

enum class EventKind { Death, Revival, AsymptoticDeath, SuddenChange };

std::string_view to_string(EventKind kind);

struct Event {
    EventKind kind = EventKind::Death;
    std::string measure;
    double p_lo = 0.0;  // bracketing interval of the event
    double p_hi = 0.0;
};

struct EventSettings {
    double esd_threshold = 1e-6;        // concurrence below this counts as dead
    double sudden_change_factor = 10.0; // second difference vs. series median
    double sudden_change_floor = 1e-6;  // absolute floor on the second difference
    double min_slope_jump = 1e-3;       // slope discontinuity a refined kink must show
    double refine_width = 1e-4;
};

// Measure columns: total, classical_K, quantum_Q, discord_D, classical_C, concurrence.
inline constexpr std::string_view kMeasureNames[] = {"total",     "classical_K", "quantum_Q",
                                                     "discord_D", "classical_C", "concurrence"};

// Throws ConfigError for an unknown measure name.
double measure_value(const CorrelationResult& result, std::string_view measure);

// Re-evaluates the measure at an arbitrary p for bisection refinement.
using Reevaluate = std::function<double(double p)>;

// `records` must be one (scenario, a, bipartition) series on a uniform grid
// with at least 5 points (ConfigError otherwise). For "concurrence" the
// death / revival crossings are reported; for the other measures, sudden
// changes. Without `reevaluate`, events keep their grid brackets.
std::vector<Event> detect_events(std::span<const CorrelationRecord> records, std::string_view measure,
                                 const Reevaluate& reevaluate = {}, const EventSettings& settings = {});

// Convenience overload for a plain series.
std::vector<Event> detect_events(std::span<const double> p, std::span<const double> values,
                                 std::string_view measure, const Reevaluate& reevaluate = {},
                                 const EventSettings& settings = {});

}  // namespace qcorr
