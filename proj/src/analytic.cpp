// Closed-form reduced matrices, transcribed entry by entry as printed.
// Each matrix is written in the {|00>, |01>, |10>, |11>} basis of the named
// pair; no entry has been corrected, even where the printed form is not a
// valid state.

#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/scenarios.hpp"

namespace qcorr {

namespace {

CMatrix real4(double scale, std::initializer_list<double> entries) {
    CMatrix m(4, 4);
    auto it = entries.begin();
    for (Eigen::Index r = 0; r < 4; ++r) {
        for (Eigen::Index c = 0; c < 4; ++c) m(r, c) = scale * *it++;
    }
    return m;
}

CMatrix amplitude_phase(Bipartition pair, const InitialStateParams& c, double p) {
    const double q = 1.0 - p;
    const double r = std::sqrt(p * q);
    const double ap = c.a_plus, am = c.a_minus, bp = c.b_plus, bm = c.b_minus;
    switch (pair) {
        case Bipartition::AB:
            return real4(0.25, {ap + p * am, 0, 0, q * bm,
                                0, am + p * ap, q * bp, 0,
                                0, q * bp, q * am, 0,
                                q * bm, 0, 0, q * ap});
        case Bipartition::AEA:
            return real4(0.5, {1, 0, 0, 0,
                               0, p, r, 0,
                               0, r, q, 0,
                               0, 0, 0, 0});
        case Bipartition::BEB:
            return real4(0.5, {1, 0, 0, 0,
                               0, 0, 0, 0,
                               0, 0, q, r,
                               0, 0, r, p});
        case Bipartition::AEB:
            return real4(0.25, {1 + p * q * ap, r * (p * ap + am), 0, 0,
                                r * (p * ap + am), p * (p * ap + am), 0, 0,
                                0, 0, q * (q * ap + am), q * r * ap,
                                0, 0, q * r * ap, p * q * ap});
        case Bipartition::BEA:
            return real4(0.25, {ap + q * am, 0, 0, r * bm,
                                0, p * am, r * bp, 0,
                                0, r * bp, am + q * ap, 0,
                                r * bm, 0, 0, p * ap});
        case Bipartition::EAEB:
            return real4(0.25, {(1 + q * q) * ap + 2 * q * am, r * (am + q * ap), 0, 0,
                                r * (am + q * ap), p * (am + q * ap), 0, 0,
                                0, 0, p * (am + q * ap), p * r * ap,
                                0, 0, p * r * ap, p * p * ap});
    }
    return {};
}

CMatrix amplitude_bitflip(Bipartition pair, const InitialStateParams& c, double p) {
    const double q = 1.0 - p;
    const double r = std::sqrt(p * q);
    const double sp = std::sqrt(p);
    const double sq = std::sqrt(q);
    const double ap = c.a_plus, am = c.a_minus, bp = c.b_plus, bm = c.b_minus, c1 = c.c1;
    switch (pair) {
        case Bipartition::AB:
            return real4(0.25, {2 * p * p + q * am, 0, 0, sq * (p * bm + q * bp),
                                0, 2 * p * p + q * ap, sq * (p * bp + q * bm), 0,
                                0, sq * (p * bp + q * bm), q * (p * am + q * ap), 0,
                                sq * (p * bm + q * bp), 0, 0, q * (q * am + p * ap)});
        case Bipartition::AEA:
            return real4(0.5, {1, 0, 0, 0,
                               0, p, r, 0,
                               0, r, q, 0,
                               0, 0, 0, 0});
        case Bipartition::BEB:
            return real4(0.5, {p, 0, 0, r,
                               0, q, r, 0,
                               0, r, p, 0,
                               r, 0, 0, q});
        case Bipartition::AEB:
            return real4(0.5, {p + p * p, 0, 0, q * sp * c1,
                               0, (1 + p) * q, q * sp * c1, 0,
                               0, q * sp * c1, p * q, 0,
                               q * sp * c1, 0, 0, q * q});
        case Bipartition::BEA: {
            const double A = q * bm + p * bp;
            const double B = p * bm + q * bp;
            const double C = p * am + q * ap;
            const double D = p * ap + q * am;
            return real4(0.25, {(1 + p) * D, 0, 0, sp * B,
                                0, p * C, sp * A, 0,
                                0, sp * A, (1 + p) * C, 0,
                                sp * B, 0, 0, p * D});
        }
        case Bipartition::EAEB:
            return real4(0.5, {p * (1 + q), 0, 0, p * sq * c1,
                               0, q * (2 - p), p * sq * c1, 0,
                               0, p * sq * c1, p * p, 0,
                               p * sq * c1, 0, 0, p * q});
    }
    return {};
}

CMatrix phase_phaseflip(Bipartition pair, const InitialStateParams& c, double p) {
    const double q = 1.0 - p;
    const double r = std::sqrt(p * q);
    const double f = std::sqrt(q) * (p - q);
    const double ap = c.a_plus, am = c.a_minus, bp = c.b_plus, bm = c.b_minus, c3 = c.c3;
    switch (pair) {
        case Bipartition::AB:
            return real4(0.25, {ap, 0, 0, f * bm,
                                0, am, f * bp, 0,
                                0, f * bp, am, 0,
                                f * bm, 0, 0, ap});
        case Bipartition::AEA:
            return real4(0.5, {1, 0, 0, 0,
                               0, 0, 0, 0,
                               0, 0, q, r,
                               0, 0, r, p});
        case Bipartition::BEB:
            return real4(0.5, {p, r, 0, 0,
                               r, q, 0, 0,
                               0, 0, p, -r,
                               0, 0, -r, q});
        case Bipartition::AEB:
            return real4(0.5, {p, r * c3, 0, 0,
                               r * c3, q, 0, 0,
                               0, 0, p, -r * c3,
                               0, 0, -r * c3, q});
        case Bipartition::BEA:
            return real4(0.25, {ap + q * am, 0, r * am, 0,
                                0, am + q * ap, 0, r * ap,
                                r * am, 0, p * am, 0,
                                0, r * ap, 0, p * ap});
        case Bipartition::EAEB:
            return real4(0.5, {p * (1 + q), -p * r * c3, p * r, -p * q * c3,
                               -p * r * c3, q * (1 + q), -p * q * c3, q * r,
                               p * r, -p * q * c3, p * p, -p * r * c3,
                               -p * q * c3, q * r, -p * r * c3, p * q});
    }
    return {};
}

}  // namespace

AnalyticReduced analytic_reduced(ScenarioKind kind, Bipartition pair, double a, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("analytic_reduced: p must lie in [0, 1]");
    const InitialStateParams c = initial_params(a);
    CMatrix m;
    switch (kind) {
        case ScenarioKind::APE: m = amplitude_phase(pair, c, p); break;
        case ScenarioKind::ABE: m = amplitude_bitflip(pair, c, p); break;
        case ScenarioKind::PPE: m = phase_phaseflip(pair, c, p); break;
        case ScenarioKind::Custom:
            throw ConfigError("no closed-form reduced matrices exist for custom scenarios");
    }
    AnalyticReduced out{m, check_density(m)};
    return out;
}

}  // namespace qcorr
