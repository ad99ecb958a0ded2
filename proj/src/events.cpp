#include "qcorr/events.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr {

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Death: return "death";
        case EventKind::Revival: return "revival";
        case EventKind::AsymptoticDeath: return "asymptotic_death";
        case EventKind::SuddenChange: return "sudden_change";
    }
    return "?";
}

double measure_value(const CorrelationResult& r, std::string_view measure) {
    if (measure == "total") return r.total;
    if (measure == "classical_K") return r.classical;
    if (measure == "quantum_Q") return r.quantum;
    if (measure == "discord_D") return r.discord_one_sided;
    if (measure == "classical_C") return r.classical_one_sided;
    if (measure == "concurrence") return r.concurrence;
    throw ConfigError("unknown measure '" + std::string(measure) + "'");
}

namespace {

void check_series(std::span<const double> p, std::span<const double> values) {
    if (p.size() != values.size()) throw ConfigError("detect_events: p and value series differ in length");
    if (p.size() < 5) throw ConfigError("detect_events needs at least 5 points, got " + std::to_string(p.size()));
    const double h = p[1] - p[0];
    if (!(h > 0.0)) throw ConfigError("detect_events: p grid must be increasing");
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (std::abs((p[i] - p[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h))) {
            throw ConfigError("detect_events: p grid must be uniform");
        }
    }
}

std::vector<Event> crossings(std::span<const double> p, std::span<const double> v, std::string_view measure,
                             const Reevaluate& reevaluate, const EventSettings& s) {
    std::vector<Event> events;
    auto alive = [&](double value) { return value >= s.esd_threshold; };
    for (std::size_t i = 1; i < p.size(); ++i) {
        const bool before = alive(v[i - 1]);
        const bool after = alive(v[i]);
        if (before == after) continue;
        double lo = p[i - 1];
        double hi = p[i];
        if (reevaluate) {
            while (hi - lo > s.refine_width) {
                const double mid = 0.5 * (lo + hi);
                (alive(reevaluate(mid)) == before ? lo : hi) = mid;
            }
        }
        EventKind kind = before ? EventKind::Death : EventKind::Revival;
        if (kind == EventKind::Death && i + 1 == p.size()) kind = EventKind::AsymptoticDeath;
        events.push_back({kind, std::string(measure), lo, hi});
    }
    return events;
}

struct Probe {
    double p;
    double f;
};

std::vector<Event> kinks(std::span<const double> p, std::span<const double> v, std::string_view measure,
                         const Reevaluate& reevaluate, const EventSettings& s) {
    const std::size_t n = p.size();
    std::vector<double> d2(n, 0.0);
    std::vector<double> interior;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d2[i] = std::abs(v[i - 1] - 2.0 * v[i] + v[i + 1]);
        interior.push_back(d2[i]);
    }
    std::nth_element(interior.begin(), interior.begin() + interior.size() / 2, interior.end());
    const double median = interior[interior.size() / 2];
    const double threshold = std::max(s.sudden_change_factor * median, s.sudden_change_floor);

    std::vector<Event> events;
    std::size_t i = 1;
    while (i + 1 < n) {
        if (!(d2[i] > threshold)) {
            ++i;
            continue;
        }
        std::size_t last = i;
        while (last + 2 < n && d2[last + 1] > threshold) ++last;
        const std::size_t left = i - 1;
        const std::size_t right = last + 1;
        i = last + 1;
        // A kink whose bracket touches the end of the series cannot be told
        // apart from an endpoint singularity (e.g. sqrt(p) terms at p = 0).
        if (left == 0 || right + 1 >= n) continue;

        Probe lo{p[left], v[left]};
        Probe hi{p[right], v[right]};
        double slope_lo = (v[left] - v[left - 1]) / (p[left] - p[left - 1]);
        double slope_hi = (v[right + 1] - v[right]) / (p[right + 1] - p[right]);
        if (reevaluate) {
            while (hi.p - lo.p > s.refine_width) {
                const double mid = 0.5 * (lo.p + hi.p);
                const double f = reevaluate(mid);
                const double from_left = lo.f + slope_lo * (mid - lo.p);
                const double from_right = hi.f + slope_hi * (mid - hi.p);
                if (std::abs(f - from_left) <= std::abs(f - from_right)) {
                    slope_lo = (f - lo.f) / (mid - lo.p);
                    lo = {mid, f};
                } else {
                    slope_hi = (hi.f - f) / (hi.p - mid);
                    hi = {mid, f};
                }
            }
        }
        if (std::abs(slope_hi - slope_lo) < s.min_slope_jump) continue;
        events.push_back({EventKind::SuddenChange, std::string(measure), lo.p, hi.p});
    }
    return events;
}

}  // namespace

std::vector<Event> detect_events(std::span<const double> p, std::span<const double> values,
                                 std::string_view measure, const Reevaluate& reevaluate,
                                 const EventSettings& settings) {
    if (std::find(std::begin(kMeasureNames), std::end(kMeasureNames), measure) == std::end(kMeasureNames)) {
        throw ConfigError("unknown measure '" + std::string(measure) + "'");
    }
    check_series(p, values);
    if (measure == "concurrence") return crossings(p, values, measure, reevaluate, settings);
    return kinks(p, values, measure, reevaluate, settings);
}

std::vector<Event> detect_events(std::span<const CorrelationRecord> records, std::string_view measure,
                                 const Reevaluate& reevaluate, const EventSettings& settings) {
    if (records.empty()) throw ConfigError("detect_events: empty record series");
    std::vector<double> p, values;
    for (const CorrelationRecord& r : records) {
        if (r.scenario != records.front().scenario || r.a != records.front().a ||
            r.bipartition != records.front().bipartition) {
            throw ConfigError("detect_events: records must come from a single (scenario, a, bipartition) series");
        }
        p.push_back(r.p);
        values.push_back(measure_value(r.result, measure));
    }
    return detect_events(p, values, measure, reevaluate, settings);
}

}  // namespace qcorr
