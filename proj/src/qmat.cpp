#include "qcorr/qmat.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

std::string_view to_string(Party party) {
    switch (party) {
        case Party::A: return "A";
        case Party::B: return "B";
        case Party::EA: return "EA";
        case Party::EB: return "EB";
    }
    return "?";
}

Party parse_party(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (c != '_') key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (key == "A") return Party::A;
    if (key == "B") return Party::B;
    if (key == "EA") return Party::EA;
    if (key == "EB") return Party::EB;
    throw ConfigError("unknown party label '" + std::string(name) + "'");
}

QubitLayout::QubitLayout(std::vector<Party> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw ConfigError("qubit layout must have at least one factor");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        for (std::size_t j = i + 1; j < factors_.size(); ++j) {
            if (factors_[i] == factors_[j]) {
                throw ConfigError("duplicate label '" + std::string(to_string(factors_[i])) +
                                  "' in qubit layout");
            }
        }
    }
}

QubitLayout QubitLayout::four_party() { return QubitLayout({Party::A, Party::B, Party::EA, Party::EB}); }

bool QubitLayout::contains(Party party) const {
    return std::find(factors_.begin(), factors_.end(), party) != factors_.end();
}

std::size_t QubitLayout::position(Party party) const {
    auto it = std::find(factors_.begin(), factors_.end(), party);
    if (it == factors_.end()) {
        throw ConfigError("label '" + std::string(to_string(party)) + "' is not part of the layout");
    }
    return static_cast<std::size_t>(it - factors_.begin());
}

std::string ValidityReport::describe() const {
    std::ostringstream os;
    os << "hermitian_dev=" << hermitian_deviation << " trace=" << trace.real();
    if (trace.imag() != 0.0) os << (trace.imag() < 0 ? "-" : "+") << std::abs(trace.imag()) << "i";
    os << " min_eig=" << min_eigenvalue;
    if (!square_power_of_two) os << " [shape]";
    if (!hermitian) os << " [not hermitian]";
    if (!unit_trace) os << " [trace != 1]";
    if (!positive) os << " [not positive]";
    return os.str();
}

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

double hermitian_deviation(const CMatrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

}  // namespace

ValidityReport check_density(const CMatrix& m, const Tolerances& tol) {
    ValidityReport r;
    r.square_power_of_two = m.rows() == m.cols() && is_power_of_two(m.rows());
    if (!r.square_power_of_two) return r;
    r.hermitian_deviation = hermitian_deviation(m);
    r.hermitian = r.hermitian_deviation <= tol.hermitian;
    r.trace = m.trace();
    r.unit_trace = std::abs(r.trace - Complex{1.0, 0.0}) <= tol.trace;
    // Eigenvalues of the Hermitian part; a non-Hermitian matrix is already rejected.
    const CMatrix herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = solver.eigenvalues().minCoeff();
    r.positive = r.min_eigenvalue >= tol.psd_floor;
    return r;
}

DensityMatrix::DensityMatrix(CMatrix m, const Tolerances& tol) : m_(std::move(m)) {
    const ValidityReport report = check_density(m_, tol);
    if (!report.valid()) throw NumericDomainError("invalid density matrix: " + report.describe());
}

std::size_t DensityMatrix::qubits() const {
    std::size_t n = 0;
    while ((Eigen::Index{1} << n) < m_.rows()) ++n;
    return n;
}

namespace pauli {

CMatrix identity() { return CMatrix::Identity(2, 2); }

CMatrix x() {
    CMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

CMatrix y() {
    CMatrix m(2, 2);
    m << Complex{0.0, 0.0}, Complex{0.0, -1.0}, Complex{0.0, 1.0}, Complex{0.0, 0.0};
    return m;
}

CMatrix z() {
    CMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

}  // namespace pauli

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitLayout& layout,
                            std::span<const Party> keep) {
    if (keep.empty()) throw ConfigError("partial_trace: keep set is empty");
    const std::size_t n = layout.size();
    if (static_cast<std::size_t>(rho.dim()) != layout.dim()) {
        throw ConfigError("partial_trace: state dimension " + std::to_string(rho.dim()) +
                          " does not match layout dimension " + std::to_string(layout.dim()));
    }

    std::vector<std::size_t> kept_pos;
    for (Party p : keep) {
        const std::size_t pos = layout.position(p);
        if (std::find(kept_pos.begin(), kept_pos.end(), pos) != kept_pos.end()) {
            throw ConfigError("partial_trace: label '" + std::string(to_string(p)) + "' listed twice");
        }
        kept_pos.push_back(pos);
    }
    std::vector<std::size_t> traced_pos;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::find(kept_pos.begin(), kept_pos.end(), i) == kept_pos.end()) traced_pos.push_back(i);
    }

    // Global bit offset contributed by each local index of the kept / traced factors.
    auto offsets = [n](const std::vector<std::size_t>& positions) {
        const std::size_t k = positions.size();
        std::vector<std::size_t> table(std::size_t{1} << k, 0);
        for (std::size_t local = 0; local < table.size(); ++local) {
            std::size_t idx = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const std::size_t bit = (local >> (k - 1 - j)) & 1u;
                idx |= bit << (n - 1 - positions[j]);
            }
            table[local] = idx;
        }
        return table;
    };
    const auto kept_off = offsets(kept_pos);
    const auto traced_off = offsets(traced_pos);

    const CMatrix& m = rho.matrix();
    const auto out_dim = static_cast<Eigen::Index>(kept_off.size());
    CMatrix out = CMatrix::Zero(out_dim, out_dim);
    for (Eigen::Index r = 0; r < out_dim; ++r) {
        for (Eigen::Index c = 0; c < out_dim; ++c) {
            Complex acc{0.0, 0.0};
            for (std::size_t t : traced_off) {
                acc += m(static_cast<Eigen::Index>(kept_off[r] | t), static_cast<Eigen::Index>(kept_off[c] | t));
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(std::move(out));
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m, double hermitian_tol) {
    if (m.rows() != m.cols()) throw NumericDomainError("hermitian_eigenvalues: matrix is not square");
    if (m.size() == 0) return {};
    const double dev = hermitian_deviation(m);
    if (dev > hermitian_tol) {
        throw NumericDomainError("hermitian_eigenvalues: matrix is not Hermitian (deviation " +
                                 std::to_string(dev) + ")");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<double> spectrum(const DensityMatrix& rho) {
    auto ev = hermitian_eigenvalues(rho.matrix());
    for (double& v : ev) v = std::clamp(v, 0.0, 1.0);
    return ev;
}

double entropy_of_spectrum(std::span<const double> eigenvalues, double cutoff) {
    double s = 0.0;
    for (double v : eigenvalues) {
        if (v > cutoff) s -= v * std::log2(v);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
    const auto ev = spectrum(rho);
    return std::max(0.0, entropy_of_spectrum(ev, tol.entropy_cutoff));
}

double shannon_entropy(std::span<const double> distribution) {
    double sum = 0.0;
    for (double v : distribution) {
        if (v < -1e-12) throw NumericDomainError("shannon_entropy: negative probability " + std::to_string(v));
        sum += std::max(v, 0.0);
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw NumericDomainError("shannon_entropy: probabilities sum to " + std::to_string(sum));
    }
    double h = 0.0;
    for (double v : distribution) {
        const double pv = std::max(v, 0.0) / sum;
        if (pv > 0.0) h -= pv * std::log2(pv);
    }
    return h;
}

}  // namespace qcorr
