#include "qcorr/channels.hpp"

#include <cctype>
#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_parameter(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ConfigError("channel parameter p must lie in [0, 1], got " + std::to_string(p));
    }
}

void check_kind(ChannelKind kind) {
    if (kind.type == ChannelType::BitFlip && kind.k != 0 && kind.k != 1) {
        throw ConfigError("bit-flip index k must be 0 or 1, got " + std::to_string(kind.k));
    }
}

// Row index of |s>_S|e>_E inside a 4x2 isometry.
constexpr Eigen::Index row(int s, int e) { return 2 * s + e; }

}  // namespace

ChannelKind ChannelKind::bit_flip(int k) {
    ChannelKind kind{ChannelType::BitFlip, k};
    check_kind(kind);
    return kind;
}

std::string to_string(ChannelKind kind) {
    switch (kind.type) {
        case ChannelType::AmplitudeDamping: return "amplitude_damping";
        case ChannelType::PhaseDamping: return "phase_damping";
        case ChannelType::BitFlip: return kind.k == 0 ? "bit_flip" : "bit_phase_flip";
        case ChannelType::PhaseFlip: return "phase_flip";
    }
    return "?";
}

ChannelKind parse_channel(std::string_view name) {
    std::string key;
    for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (key == "amplitude_damping" || key == "ad") return ChannelKind::amplitude_damping();
    if (key == "phase_damping" || key == "pd") return ChannelKind::phase_damping();
    if (key == "bit_flip" || key == "bf") return ChannelKind::bit_flip(0);
    if (key == "bit_phase_flip" || key == "bpf") return ChannelKind::bit_flip(1);
    if (key == "phase_flip" || key == "pf") return ChannelKind::phase_flip();
    throw ConfigError("unknown channel '" + std::string(name) + "'");
}

double identity_point(ChannelKind kind) {
    switch (kind.type) {
        case ChannelType::AmplitudeDamping:
        case ChannelType::PhaseDamping: return 0.0;
        case ChannelType::BitFlip:
        case ChannelType::PhaseFlip: return 1.0;
    }
    return 0.0;
}

Isometry isometry_for(ChannelKind kind, double p) {
    check_parameter(p);
    check_kind(kind);
    const double q = 1.0 - p;
    const double sp = std::sqrt(p);
    const double sq = std::sqrt(q);

    Isometry iso;
    iso.p = p;
    iso.q = q;
    iso.map.setZero();
    auto& v = iso.map;
    switch (kind.type) {
        case ChannelType::AmplitudeDamping:
            // |0>|0> -> |0>|0>;  |1>|0> -> sqrt(q)|1>|0> + sqrt(p)|0>|1>
            v(row(0, 0), 0) = 1.0;
            v(row(1, 0), 1) = sq;
            v(row(0, 1), 1) = sp;
            break;
        case ChannelType::PhaseDamping:
            // |0>|0> -> |0>|0>;  |1>|0> -> sqrt(q)|1>|0> + sqrt(p)|1>|1>
            v(row(0, 0), 0) = 1.0;
            v(row(1, 0), 1) = sq;
            v(row(1, 1), 1) = sp;
            break;
        case ChannelType::BitFlip: {
            // |0>|0> -> sqrt(p)|0>|0> + i^k sqrt(q)|1>|1>
            // |1>|0> -> sqrt(p)|1>|0> + (-i)^k sqrt(q)|0>|1>
            const Complex up = kind.k == 0 ? Complex{1.0, 0.0} : kI;
            const Complex down = kind.k == 0 ? Complex{1.0, 0.0} : -kI;
            v(row(0, 0), 0) = sp;
            v(row(1, 1), 0) = up * sq;
            v(row(1, 0), 1) = sp;
            v(row(0, 1), 1) = down * sq;
            break;
        }
        case ChannelType::PhaseFlip:
            // |0>|0> -> sqrt(p)|0>|0> + sqrt(q)|0>|1>;  |1>|0> -> sqrt(p)|1>|0> - sqrt(q)|1>|1>
            v(row(0, 0), 0) = sp;
            v(row(0, 1), 0) = sq;
            v(row(1, 0), 1) = sp;
            v(row(1, 1), 1) = -sq;
            break;
    }
    return iso;
}

KrausPair kraus_for(ChannelKind kind, double p) {
    const Isometry iso = isometry_for(kind, p);
    KrausPair out;
    out.p = p;
    for (int s_out = 0; s_out < 2; ++s_out) {
        for (int s_in = 0; s_in < 2; ++s_in) {
            out.first(s_out, s_in) = iso.map(row(s_out, 0), s_in);
            out.second(s_out, s_in) = iso.map(row(s_out, 1), s_in);
        }
    }
    return out;
}

CMatrix joint_isometry(const Isometry& on_a, const Isometry& on_b) {
    CMatrix w = CMatrix::Zero(16, 4);
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const Eigen::Index col = 2 * a + b;
            for (int a2 = 0; a2 < 2; ++a2) {
                for (int ea = 0; ea < 2; ++ea) {
                    const Complex va = on_a.map(row(a2, ea), a);
                    if (va == Complex{}) continue;
                    for (int b2 = 0; b2 < 2; ++b2) {
                        for (int eb = 0; eb < 2; ++eb) {
                            const Eigen::Index global = 8 * a2 + 4 * b2 + 2 * ea + eb;
                            w(global, col) += va * on_b.map(row(b2, eb), b);
                        }
                    }
                }
            }
        }
    }
    return w;
}

DensityMatrix evolve(const DensityMatrix& rho0, ChannelKind kind_a, ChannelKind kind_b, double p) {
    return evolve(rho0, kind_a, p, kind_b, p);
}

DensityMatrix evolve(const DensityMatrix& rho0, ChannelKind kind_a, double p_a,
                     ChannelKind kind_b, double p_b) {
    if (rho0.dim() != 4) {
        throw ConfigError("evolve expects a two-qubit state, got dimension " + std::to_string(rho0.dim()));
    }
    const CMatrix w = joint_isometry(isometry_for(kind_a, p_a), isometry_for(kind_b, p_b));
    CMatrix total = w * rho0.matrix() * w.adjoint();
    // Restore exact Hermiticity lost to rounding in the triple product.
    total = 0.5 * (total + total.adjoint()).eval();
    return DensityMatrix(std::move(total));
}

DensityMatrix reduced(const DensityMatrix& rho_total, Bipartition pair) {
    static const QubitLayout layout = QubitLayout::four_party();
    const auto keep = parties(pair);
    return partial_trace(rho_total, layout, keep);
}

}  // namespace qcorr
