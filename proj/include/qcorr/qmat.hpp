#pragma once

// Dense complex matrix kernel for states of up to four qubits.
//
// Basis convention: a multi-qubit index is big-endian over the factors of a
// QubitLayout, so the first factor is the slowest-varying bit and |0> comes
// before |1> in every factor.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

struct Tolerances {
    double hermitian = 1e-12;        // max |M - M^dagger| entry
    double trace = 1e-12;            // |Tr M - 1|
    double psd_floor = -1e-10;       // smallest admissible eigenvalue
    double entropy_cutoff = 1e-14;   // eigenvalues below this count as 0 in S(rho)
    double eigen_hermitian = 1e-10;  // Hermiticity required by hermitian_eigenvalues
};

const Tolerances& default_tolerances();

enum class Party { A, B, EA, EB };

std::string_view to_string(Party party);
// Accepts "A", "B", "EA"/"E_A", "EB"/"E_B" (case-insensitive).
Party parse_party(std::string_view name);

// Ordered list of qubit tensor factors.
class QubitLayout {
public:
    explicit QubitLayout(std::vector<Party> factors);

    // The global (A, B, E_A, E_B) ordering.
    static QubitLayout four_party();

    std::size_t size() const { return factors_.size(); }
    std::size_t dim() const { return std::size_t{1} << factors_.size(); }
    std::span<const Party> factors() const { return factors_; }
    bool contains(Party party) const;
    // Throws ConfigError if the label is not part of the layout.
    std::size_t position(Party party) const;

private:
    std::vector<Party> factors_;
};

struct ValidityReport {
    double hermitian_deviation = 0.0;
    Complex trace{0.0, 0.0};
    double min_eigenvalue = 0.0;
    bool square_power_of_two = false;
    bool hermitian = false;
    bool unit_trace = false;
    bool positive = false;

    bool valid() const { return square_power_of_two && hermitian && unit_trace && positive; }
    std::string describe() const;
};

ValidityReport check_density(const CMatrix& m, const Tolerances& tol = default_tolerances());

// Hermitian, unit-trace, positive semidefinite matrix of dimension 2^n.
// Construction validates; instances are immutable.
class DensityMatrix {
public:
    explicit DensityMatrix(CMatrix m, const Tolerances& tol = default_tolerances());

    const CMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    std::size_t qubits() const;

private:
    CMatrix m_;
};

namespace pauli {
CMatrix identity();
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

// Kronecker product, left factor slowest.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

// Reduced state over `keep`, emitted in the order the labels are listed in
// `keep` (first label is the slow index). Throws ConfigError for empty,
// duplicated or unknown labels and when rho does not match the layout.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitLayout& layout,
                            std::span<const Party> keep);

// Real eigenvalues of a Hermitian matrix in descending order. Throws
// NumericDomainError when M deviates from Hermitian by more than `hermitian_tol`.
std::vector<double> hermitian_eigenvalues(const CMatrix& m, double hermitian_tol = 1e-10);

// Eigenvalues of a validated state, descending and clamped to [0, 1].
std::vector<double> spectrum(const DensityMatrix& rho);

// -sum x log2 x over a spectrum; entries below `cutoff` are dropped.
double entropy_of_spectrum(std::span<const double> eigenvalues, double cutoff = 1e-14);

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

// Shannon entropy in bits. Entries down to -1e-12 are clamped to 0 and the
// list renormalized; a sum off by more than 1e-9 throws NumericDomainError.
double shannon_entropy(std::span<const double> distribution);

}  // namespace qcorr
