#pragma once

// Single-qubit noise channels written as state maps on qubit (x) environment
// with the environment starting in |0>, and the joint two-qubit evolution.

#include <string>
#include <string_view>

#include "qcorr/bipartition.hpp"
#include "qcorr/qmat.hpp"

namespace qcorr {

enum class ChannelType { AmplitudeDamping, PhaseDamping, BitFlip, PhaseFlip };

struct ChannelKind {
    ChannelType type = ChannelType::AmplitudeDamping;
    int k = 0;  // BitFlip only: 0 = bit flip, 1 = bit-phase flip

    static ChannelKind amplitude_damping() { return {ChannelType::AmplitudeDamping, 0}; }
    static ChannelKind phase_damping() { return {ChannelType::PhaseDamping, 0}; }
    static ChannelKind bit_flip(int k = 0);
    static ChannelKind phase_flip() { return {ChannelType::PhaseFlip, 0}; }

    friend bool operator==(const ChannelKind&, const ChannelKind&) = default;
};

std::string to_string(ChannelKind kind);
// amplitude_damping|ad, phase_damping|pd, bit_flip|bf, bit_phase_flip|bpf, phase_flip|pf
ChannelKind parse_channel(std::string_view name);

// Parameter value at which the channel acts as the identity
// (p = 0 for the damping channels, p = 1 for the flip channels).
double identity_point(ChannelKind kind);

// Columns are the images of |0>_S|0>_E and |1>_S|0>_E in the S (x) E basis
// {|00>, |01>, |10>, |11>} (system index slow).
struct Isometry {
    Eigen::Matrix<Complex, 4, 2> map;
    double p = 0.0;
    double q = 1.0;
};

// Gamma_e = (<e|_E (x) I) V.
struct KrausPair {
    Eigen::Matrix2cd first;
    Eigen::Matrix2cd second;
    double p = 0.0;
};

// Both throw ConfigError for p outside [0, 1] or an invalid bit-flip index.
Isometry isometry_for(ChannelKind kind, double p);
KrausPair kraus_for(ChannelKind kind, double p);

// 16 x 4 map taking |a b> to the global A (x) B (x) E_A (x) E_B basis.
CMatrix joint_isometry(const Isometry& on_a, const Isometry& on_b);

// rho_total = W rho0 W^dagger with both environments initially in |0>.
DensityMatrix evolve(const DensityMatrix& rho0, ChannelKind kind_a, ChannelKind kind_b, double p);
DensityMatrix evolve(const DensityMatrix& rho0, ChannelKind kind_a, double p_a,
                     ChannelKind kind_b, double p_b);

// Two-party reduced state of a 16-dim four-party state, ordered as named.
DensityMatrix reduced(const DensityMatrix& rho_total, Bipartition pair);

}  // namespace qcorr
