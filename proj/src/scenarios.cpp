#include "qcorr/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "qcorr/errors.hpp"

namespace qcorr {

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::APE: return "ape";
        case ScenarioKind::ABE: return "abe";
        case ScenarioKind::PPE: return "ppe";
        case ScenarioKind::Custom: return "custom";
    }
    return "?";
}

ScenarioKind parse_scenario(std::string_view name) {
    std::string key;
    for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (key == "ape") return ScenarioKind::APE;
    if (key == "abe") return ScenarioKind::ABE;
    if (key == "ppe") return ScenarioKind::PPE;
    if (key == "custom") return ScenarioKind::Custom;
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

ChannelPair channels_for(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::APE: return {ChannelKind::amplitude_damping(), ChannelKind::phase_damping()};
        case ScenarioKind::ABE: return {ChannelKind::amplitude_damping(), ChannelKind::bit_flip(0)};
        case ScenarioKind::PPE: return {ChannelKind::phase_damping(), ChannelKind::phase_flip()};
        case ScenarioKind::Custom: break;
    }
    throw ConfigError("custom scenario requires explicit channel names");
}

InitialStateParams initial_params(double a) {
    if (!(a > 0.0 && a <= 1.0)) {
        throw ConfigError("initial-state parameter a must lie in (0, 1], got " + std::to_string(a));
    }
    InitialStateParams c;
    c.a = a;
    c.c1 = c.c2 = c.c3 = -a;
    c.a_plus = c.c0 + c.c3;
    c.a_minus = c.c0 - c.c3;
    c.b_plus = c.c1 + c.c2;
    c.b_minus = c.c1 - c.c2;
    return c;
}

DensityMatrix initial_state(double a) {
    const InitialStateParams c = initial_params(a);
    CMatrix m = c.c0 * tensor(pauli::identity(), pauli::identity()) + c.c1 * tensor(pauli::x(), pauli::x()) +
                c.c2 * tensor(pauli::y(), pauli::y()) + c.c3 * tensor(pauli::z(), pauli::z());
    return DensityMatrix(0.25 * m);
}

ChannelPair ScenarioConfig::channels() const {
    if (scenario != ScenarioKind::Custom) return channels_for(scenario);
    if (!channel_a || !channel_b) throw ConfigError("custom scenario requires both channel_a and channel_b");
    return {*channel_a, *channel_b};
}

void ScenarioConfig::validate() const {
    (void)channels();
    (void)initial_params(a);
    if (p_grid.empty()) throw ConfigError("p grid is empty");
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (!(p_grid[i] >= 0.0 && p_grid[i] <= 1.0)) {
            throw ConfigError("p grid value " + std::to_string(p_grid[i]) + " lies outside [0, 1]");
        }
        if (i > 0 && !(p_grid[i] > p_grid[i - 1])) throw ConfigError("p grid must be strictly increasing");
    }
    if (bipartitions.empty()) throw ConfigError("no bipartitions requested");
    for (std::size_t i = 0; i < bipartitions.size(); ++i) {
        for (std::size_t j = i + 1; j < bipartitions.size(); ++j) {
            if (bipartitions[i] == bipartitions[j]) {
                throw ConfigError("bipartition '" + std::string(to_string(bipartitions[i])) + "' listed twice");
            }
        }
    }
    optimizer.validate();
}

std::vector<double> uniform_grid(double lo, double hi, int steps) {
    if (steps < 1) throw ConfigError("p_steps must be at least 1");
    if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) throw ConfigError("p range must satisfy 0 <= p_min <= p_max <= 1");
    if (steps == 1) return {lo};
    if (!(hi > lo)) throw ConfigError("p_max must exceed p_min when p_steps > 1");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
    grid.back() = hi;
    return grid;
}

namespace {

double max_abs_dev(const CMatrix& x, const CMatrix& y) { return (x - y).cwiseAbs().maxCoeff(); }

CorrelationRecord evaluate_reduced(const ScenarioConfig& config, double p, Bipartition pair,
                                   const DensityMatrix& total) {
    CorrelationRecord rec;
    rec.scenario = config.scenario;
    rec.a = config.a;
    rec.p = p;
    rec.bipartition = pair;
    try {
        const DensityMatrix rho = reduced(total, pair);
        rec.result = full_result(rho, config.optimizer, config.measured_side);
        if (config.oracle_check && config.scenario != ScenarioKind::Custom) {
            rec.oracle_max_abs_dev =
                max_abs_dev(rho.matrix(), analytic_reduced(config.scenario, pair, config.a, p).matrix);
        }
    } catch (const NumericDomainError& e) {
        std::ostringstream os;
        os << "at p=" << p << ", bipartition " << to_string(pair) << ": " << e.what();
        throw NumericDomainError(os.str());
    }
    return rec;
}

DensityMatrix evolve_config(const ScenarioConfig& config, const DensityMatrix& rho0, double p) {
    const ChannelPair ch = config.channels();
    return evolve(rho0, ch.a, ch.b, p);
}

}  // namespace

CorrelationRecord evaluate_point(const ScenarioConfig& config, double p, Bipartition pair) {
    const DensityMatrix rho0 = initial_state(config.a);
    return evaluate_reduced(config, p, pair, evolve_config(config, rho0, p));
}

std::vector<CorrelationRecord> sweep(const ScenarioConfig& config) {
    config.validate();
    const DensityMatrix rho0 = initial_state(config.a);
    const std::size_t n_p = config.p_grid.size();
    const std::size_t n_pairs = config.bipartitions.size();
    std::vector<CorrelationRecord> records(n_p * n_pairs);

    // Each task fills a fixed slot, so the output order does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_index = n_p;
    std::exception_ptr error;

    auto worker = [&] {
        for (std::size_t i = next++; i < n_p; i = next++) {
            try {
                const double p = config.p_grid[i];
                const DensityMatrix total = evolve_config(config, rho0, p);
                for (std::size_t j = 0; j < n_pairs; ++j) {
                    records[i * n_pairs + j] = evaluate_reduced(config, p, config.bipartitions[j], total);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };

    unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_p));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return records;
}

namespace {

CMatrix swap_factors(const CMatrix& m) {
    CMatrix out(4, 4);
    auto swapped = [](Eigen::Index i) { return 2 * (i % 2) + i / 2; };
    for (Eigen::Index r = 0; r < 4; ++r) {
        for (Eigen::Index c = 0; c < 4; ++c) out(swapped(r), swapped(c)) = m(r, c);
    }
    return out;
}

}  // namespace

std::vector<DiscrepancyRow> discrepancy_report(ScenarioKind kind, const std::vector<double>& a_values,
                                               const std::vector<double>& p_grid) {
    const ChannelPair ch = channels_for(kind);
    std::vector<DiscrepancyRow> rows;
    for (double a : a_values) {
        const DensityMatrix rho0 = initial_state(a);
        for (double p : p_grid) {
            const DensityMatrix total = evolve(rho0, ch.a, ch.b, p);
            for (Bipartition pair : kAllBipartitions) {
                const CMatrix numeric = reduced(total, pair).matrix();
                const AnalyticReduced printed = analytic_reduced(kind, pair, a, p);
                DiscrepancyRow row;
                row.scenario = kind;
                row.pair = pair;
                row.a = a;
                row.p = p;
                row.max_abs_dev = max_abs_dev(numeric, printed.matrix);
                row.trace_of_printed = printed.matrix.trace().real();
                row.printed_valid = printed.validity.valid();
                row.matches = row.max_abs_dev <= kOracleTolerance;
                if (!printed.validity.square_power_of_two || !printed.validity.hermitian) {
                    row.note = "printed matrix is not Hermitian";
                } else if (!printed.validity.unit_trace) {
                    row.note = "printed trace is not 1";
                } else if (!printed.validity.positive) {
                    row.note = "printed matrix is not positive semidefinite";
                } else if (!row.matches) {
                    row.note = max_abs_dev(swap_factors(numeric), printed.matrix) <= kOracleTolerance
                                   ? "matches only with the two factors swapped"
                                   : "entries differ from the evolved state";
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace qcorr
