#pragma once

// Correlation measures of two-qubit states: quantum mutual information,
// one-sided discord / classical correlation, the two-sided classical (K) and
// quantum (Q) correlations and the Wootters concurrence. All entropies are in
// bits.

#include <array>
#include <string_view>

#include "qcorr/qmat.hpp"

namespace qcorr {

enum class Side { A, B };

std::string_view to_string(Side side);
Side parse_side(std::string_view name);

// Rank-1 projective qubit measurement
//   |first>  = cos(theta)|0> + e^{i phi} sin(theta)|1>
//   |second> = e^{-i phi} sin(theta)|0> - cos(theta)|1>
struct MeasurementBasis {
    double theta = 0.0;
    double phi = 0.0;

    Eigen::Vector2cd first() const;
    Eigen::Vector2cd second() const;
    Eigen::Matrix2cd projector(int outcome) const;
    // Same projector pair with theta in [0, pi) and phi in [0, 2 pi).
    MeasurementBasis canonical() const;

    friend bool operator==(const MeasurementBasis&, const MeasurementBasis&) = default;
};

struct OptimizerSettings {
    int grid_points_per_angle = 24;
    int refine_iterations = 200;
    double refine_tolerance = 1e-9;

    // Throws ConfigError when grid_points_per_angle < 4 or the refinement settings are negative.
    void validate() const;
};

// Measures within this distance below zero are reported as zero; anything
// more negative raises NumericDomainError.
inline constexpr double kMeasureClampTolerance = 1e-8;

struct OneSidedResult {
    double discord = 0.0;    // I_q - max_basis J
    double classical = 0.0;  // max_basis J
    MeasurementBasis basis;  // maximizer of J on the measured side
};

struct TwoSidedResult {
    double classical = 0.0;  // K
    MeasurementBasis basis_a;
    MeasurementBasis basis_b;
};

struct CorrelationResult {
    double total = 0.0;                // I_q
    double classical = 0.0;            // K
    double quantum = 0.0;              // Q = I_q - K
    double discord_one_sided = 0.0;    // D
    double classical_one_sided = 0.0;  // C = I_q - D
    double concurrence = 0.0;
    Side measured_side = Side::B;
    MeasurementBasis discord_basis;
    MeasurementBasis basis_a;
    MeasurementBasis basis_b;
};

// p[i][j] = Tr[(Pi_i^A (x) Pi_j^B) rho]
using JointDistribution = std::array<std::array<double, 2>, 2>;

double mutual_information(const DensityMatrix& rho);

// sum_j q_j S(rho_unmeasured^j) after measuring `measured` in `basis`.
double measured_conditional_entropy(const DensityMatrix& rho, Side measured, const MeasurementBasis& basis);

OneSidedResult discord_one_sided(const DensityMatrix& rho, Side measured, const OptimizerSettings& opt = {});
double classical_one_sided(const DensityMatrix& rho, Side measured, const OptimizerSettings& opt = {});

JointDistribution joint_outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis_a,
                                             const MeasurementBasis& basis_b);

// H(A) + H(B) - H(A, B) of a 2x2 joint distribution.
double classical_mutual_information(const JointDistribution& p);

TwoSidedResult classical_two_sided(const DensityMatrix& rho, const OptimizerSettings& opt = {});
double quantum_two_sided(const DensityMatrix& rho, const OptimizerSettings& opt = {});

double concurrence(const DensityMatrix& rho);

CorrelationResult full_result(const DensityMatrix& rho, const OptimizerSettings& opt = {},
                              Side measured = Side::B);

}  // namespace qcorr
