#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/nelder_mead.hpp"

namespace qcorr {

namespace {

using Mat4 = Eigen::Matrix4cd;
using Mat2 = Eigen::Matrix2cd;

constexpr double kPi = std::numbers::pi;
constexpr double kOutcomeCutoff = 1e-14;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

Mat4 as_two_qubit(const DensityMatrix& rho, const char* op) {
    if (rho.dim() != 4) {
        throw ConfigError(std::string(op) + " expects a two-qubit state, got dimension " +
                          std::to_string(rho.dim()));
    }
    return rho.matrix();
}

// Eigenvalues of a 2x2 Hermitian block, clamped at 0.
std::array<double, 2> eigen2(const Mat2& m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {std::max(mean + r, 0.0), std::max(mean - r, 0.0)};
}

double entropy2(const Mat2& m) {
    const auto ev = eigen2(m);
    return -(xlog2x(ev[0]) + xlog2x(ev[1]));
}

Mat2 marginal(const Mat4& rho, Side keep) {
    Mat2 out = Mat2::Zero();
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int t = 0; t < 2; ++t) {
                out(x, y) += keep == Side::A ? rho(2 * x + t, 2 * y + t) : rho(2 * t + x, 2 * t + y);
            }
        }
    }
    return out;
}

double entropy4(const Mat4& rho) {
    Eigen::SelfAdjointEigenSolver<Mat4> solver(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double v = std::clamp(solver.eigenvalues()(i), 0.0, 1.0);
        if (v > 1e-14) s -= v * std::log2(v);
    }
    return std::max(s, 0.0);
}

// Unnormalized state of the unmeasured qubit after outcome |v> on `measured`.
Mat2 conditional_block(const Mat4& rho, Side measured, const Eigen::Vector2cd& v) {
    Mat2 out = Mat2::Zero();
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            Complex acc{0.0, 0.0};
            for (int m = 0; m < 2; ++m) {
                for (int n = 0; n < 2; ++n) {
                    const Complex amp = std::conj(v(m)) * v(n);
                    acc += measured == Side::B ? amp * rho(2 * x + m, 2 * y + n) : amp * rho(2 * m + x, 2 * n + y);
                }
            }
            out(x, y) = acc;
        }
    }
    return out;
}

double conditional_entropy(const Mat4& rho, Side measured, const MeasurementBasis& basis) {
    double s = 0.0;
    for (const Eigen::Vector2cd& v : {basis.first(), basis.second()}) {
        const Mat2 block = conditional_block(rho, measured, v);
        const double q = block.trace().real();
        if (q < kOutcomeCutoff) continue;
        const auto ev = eigen2(block);
        // q S(block / q) = -sum lambda log2(lambda / q)
        for (double lambda : ev) {
            if (lambda > 0.0) s -= lambda * std::log2(lambda / q);
        }
    }
    return std::max(s, 0.0);
}

double clamp_measure(double value, const char* name) {
    if (value >= 0.0) return value;
    if (value >= -kMeasureClampTolerance) return 0.0;
    throw NumericDomainError(std::string(name) + " is negative beyond tolerance: " + std::to_string(value));
}

struct Entropies {
    double a, b, ab;
    double mutual() const { return a + b - ab; }
};

Entropies entropies(const Mat4& rho) {
    return {entropy2(marginal(rho, Side::A)), entropy2(marginal(rho, Side::B)), entropy4(rho)};
}

double theta_at(int i, int g) { return kPi * i / (g - 1); }
double phi_at(int j, int g) { return 2.0 * kPi * j / g; }

optim::SimplexOptions simplex_options(const OptimizerSettings& opt) {
    optim::SimplexOptions o;
    o.max_iterations = opt.refine_iterations;
    o.tolerance = opt.refine_tolerance;
    return o;
}

// max_basis J = S(rho_unmeasured) - S_cond
OneSidedResult one_sided(const Mat4& rho, const Entropies& s, Side measured, const OptimizerSettings& opt) {
    opt.validate();
    const double s_unmeasured = measured == Side::B ? s.a : s.b;
    auto gain = [&](double theta, double phi) {
        return s_unmeasured - conditional_entropy(rho, measured, MeasurementBasis{theta, phi});
    };

    const int g = opt.grid_points_per_angle;
    double best = -1.0;
    MeasurementBasis best_basis;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            const double v = gain(theta_at(i, g), phi_at(j, g));
            if (v > best) {
                best = v;
                best_basis = {theta_at(i, g), phi_at(j, g)};
            }
        }
    }

    if (opt.refine_iterations > 0) {
        const std::array<double, 2> step{kPi / (g - 1), 2.0 * kPi / g};
        const auto refined = optim::nelder_mead(
            [&](std::span<const double> x) { return -gain(x[0], x[1]); },
            {best_basis.theta, best_basis.phi}, step, simplex_options(opt));
        if (-refined.value > best) {
            best = -refined.value;
            best_basis = {refined.x[0], refined.x[1]};
        }
    }

    OneSidedResult out;
    const double total = s.mutual();
    out.classical = std::min(clamp_measure(best, "one-sided classical correlation"), std::max(total, 0.0));
    out.discord = clamp_measure(total - out.classical, "quantum discord");
    if (out.discord == 0.0) out.classical = std::max(total, 0.0);
    out.basis = best_basis.canonical();
    return out;
}

// Joint outcome probabilities expressed through the B-side blocks of the A outcomes.
struct BSideBlocks {
    std::array<double, 2> p_a;       // marginal of A outcomes
    std::array<double, 2> m00, m11;  // diagonal of the unnormalized B states
    std::array<Complex, 2> m01;
};

BSideBlocks b_side_blocks(const Mat4& rho, const MeasurementBasis& basis_a) {
    BSideBlocks out{};
    int i = 0;
    for (const Eigen::Vector2cd& v : {basis_a.first(), basis_a.second()}) {
        const Mat2 block = conditional_block(rho, Side::A, v);
        out.p_a[i] = block.trace().real();
        out.m00[i] = block(0, 0).real();
        out.m11[i] = block(1, 1).real();
        out.m01[i] = block(0, 1);
        ++i;
    }
    return out;
}

struct BAngle {
    double cc, ss, cs2;
    Complex phase;
};

BAngle b_angle(double theta, double phi) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * c, s * s, 2.0 * c * s, std::polar(1.0, phi)};
}

double mutual_from_blocks(const BSideBlocks& blk, const BAngle& b) {
    double joint[2][2];
    for (int i = 0; i < 2; ++i) {
        const double p1 = b.cc * blk.m00[i] + b.ss * blk.m11[i] + b.cs2 * (b.phase * blk.m01[i]).real();
        joint[i][0] = std::max(p1, 0.0);
        joint[i][1] = std::max(blk.p_a[i] - p1, 0.0);
    }
    const double pb0 = joint[0][0] + joint[1][0];
    const double pb1 = joint[0][1] + joint[1][1];
    const double pa0 = joint[0][0] + joint[0][1];
    const double pa1 = joint[1][0] + joint[1][1];
    return xlog2x(joint[0][0]) + xlog2x(joint[0][1]) + xlog2x(joint[1][0]) + xlog2x(joint[1][1]) -
           xlog2x(pa0) - xlog2x(pa1) - xlog2x(pb0) - xlog2x(pb1);
}

TwoSidedResult two_sided(const Mat4& rho, const OptimizerSettings& opt) {
    opt.validate();
    const int g = opt.grid_points_per_angle;

    std::vector<BAngle> b_grid;
    b_grid.reserve(static_cast<std::size_t>(g) * g);
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) b_grid.push_back(b_angle(theta_at(i, g), phi_at(j, g)));
    }

    // Lexicographic scan with strict improvement keeps the smallest angle tuple on ties.
    double best = -1.0;
    int best_a = 0, best_b = 0;
    for (int ia = 0; ia < g * g; ++ia) {
        const BSideBlocks blk = b_side_blocks(rho, {theta_at(ia / g, g), phi_at(ia % g, g)});
        for (int ib = 0; ib < g * g; ++ib) {
            const double v = mutual_from_blocks(blk, b_grid[static_cast<std::size_t>(ib)]);
            if (v > best) {
                best = v;
                best_a = ia;
                best_b = ib;
            }
        }
    }
    MeasurementBasis basis_a{theta_at(best_a / g, g), phi_at(best_a % g, g)};
    MeasurementBasis basis_b{theta_at(best_b / g, g), phi_at(best_b % g, g)};

    if (opt.refine_iterations > 0) {
        auto objective = [&](std::span<const double> x) {
            return -mutual_from_blocks(b_side_blocks(rho, {x[0], x[1]}), b_angle(x[2], x[3]));
        };
        const double dt = kPi / (g - 1);
        const double dp = 2.0 * kPi / g;
        const std::array<double, 4> step{dt, dp, dt, dp};
        const auto refined = optim::nelder_mead(
            objective, {basis_a.theta, basis_a.phi, basis_b.theta, basis_b.phi}, step, simplex_options(opt));
        if (-refined.value > best) {
            best = -refined.value;
            basis_a = {refined.x[0], refined.x[1]};
            basis_b = {refined.x[2], refined.x[3]};
        }
    }

    return {clamp_measure(best, "two-sided classical correlation"), basis_a.canonical(), basis_b.canonical()};
}

double concurrence_of(const Mat4& rho) {
    Mat4 yy = Mat4::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Mat4 r = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Mat4> solver(r, false);
    std::array<double, 4> roots{};
    for (int i = 0; i < 4; ++i) {
        const double lambda = solver.eigenvalues()(i).real();
        if (lambda < -1e-12) {
            throw NumericDomainError("concurrence: R has a negative eigenvalue " + std::to_string(lambda));
        }
        roots[static_cast<std::size_t>(i)] = std::sqrt(std::max(lambda, 0.0));
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return std::clamp(roots[0] - roots[1] - roots[2] - roots[3], 0.0, 1.0);
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::A ? "a" : "b"; }

Side parse_side(std::string_view name) {
    if (name.size() == 1) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
        if (c == 'a') return Side::A;
        if (c == 'b') return Side::B;
    }
    throw ConfigError("measured side must be 'a' or 'b', got '" + std::string(name) + "'");
}

Eigen::Vector2cd MeasurementBasis::first() const {
    return {Complex{std::cos(theta), 0.0}, std::polar(std::sin(theta), phi)};
}

Eigen::Vector2cd MeasurementBasis::second() const {
    return {std::polar(std::sin(theta), -phi), Complex{-std::cos(theta), 0.0}};
}

Eigen::Matrix2cd MeasurementBasis::projector(int outcome) const {
    const Eigen::Vector2cd v = outcome == 0 ? first() : second();
    return v * v.adjoint();
}

MeasurementBasis MeasurementBasis::canonical() const {
    double t = std::fmod(theta, kPi);
    if (t < 0.0) t += kPi;
    if (t >= kPi) t -= kPi;
    double f = std::fmod(phi, 2.0 * kPi);
    if (f < 0.0) f += 2.0 * kPi;
    if (f >= 2.0 * kPi) f -= 2.0 * kPi;
    return {t, f};
}

void OptimizerSettings::validate() const {
    if (grid_points_per_angle < 4) {
        throw ConfigError("grid_points_per_angle must be at least 4, got " + std::to_string(grid_points_per_angle));
    }
    if (refine_iterations < 0) throw ConfigError("refine_iterations must be non-negative");
    if (!(refine_tolerance > 0.0)) throw ConfigError("refine_tolerance must be positive");
}

double mutual_information(const DensityMatrix& rho) {
    const Mat4 m = as_two_qubit(rho, "mutual_information");
    return clamp_measure(entropies(m).mutual(), "quantum mutual information");
}

double measured_conditional_entropy(const DensityMatrix& rho, Side measured, const MeasurementBasis& basis) {
    return conditional_entropy(as_two_qubit(rho, "measured_conditional_entropy"), measured, basis);
}

OneSidedResult discord_one_sided(const DensityMatrix& rho, Side measured, const OptimizerSettings& opt) {
    const Mat4 m = as_two_qubit(rho, "discord_one_sided");
    return one_sided(m, entropies(m), measured, opt);
}

double classical_one_sided(const DensityMatrix& rho, Side measured, const OptimizerSettings& opt) {
    return discord_one_sided(rho, measured, opt).classical;
}

JointDistribution joint_outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis_a,
                                             const MeasurementBasis& basis_b) {
    const Mat4 m = as_two_qubit(rho, "joint_outcome_distribution");
    JointDistribution p{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Eigen::Vector4cd v;
            const Eigen::Vector2cd a = i == 0 ? basis_a.first() : basis_a.second();
            const Eigen::Vector2cd b = j == 0 ? basis_b.first() : basis_b.second();
            v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
            p[i][j] = std::max((v.adjoint() * m * v)(0, 0).real(), 0.0);
        }
    }
    return p;
}

double classical_mutual_information(const JointDistribution& p) {
    const std::array<double, 4> joint{p[0][0], p[0][1], p[1][0], p[1][1]};
    const std::array<double, 2> pa{p[0][0] + p[0][1], p[1][0] + p[1][1]};
    const std::array<double, 2> pb{p[0][0] + p[1][0], p[0][1] + p[1][1]};
    return shannon_entropy(pa) + shannon_entropy(pb) - shannon_entropy(joint);
}

TwoSidedResult classical_two_sided(const DensityMatrix& rho, const OptimizerSettings& opt) {
    const Mat4 m = as_two_qubit(rho, "classical_two_sided");
    TwoSidedResult out = two_sided(m, opt);
    const double total = std::max(entropies(m).mutual(), 0.0);
    out.classical = std::min(out.classical, total);
    return out;
}

double quantum_two_sided(const DensityMatrix& rho, const OptimizerSettings& opt) {
    const Mat4 m = as_two_qubit(rho, "quantum_two_sided");
    const double total = clamp_measure(entropies(m).mutual(), "quantum mutual information");
    const TwoSidedResult k = two_sided(m, opt);
    return clamp_measure(total - k.classical, "two-sided quantum correlation");
}

double concurrence(const DensityMatrix& rho) { return concurrence_of(as_two_qubit(rho, "concurrence")); }

CorrelationResult full_result(const DensityMatrix& rho, const OptimizerSettings& opt, Side measured) {
    const Mat4 m = as_two_qubit(rho, "full_result");
    const Entropies s = entropies(m);

    CorrelationResult r;
    r.total = clamp_measure(s.mutual(), "quantum mutual information");
    r.measured_side = measured;

    const OneSidedResult one = one_sided(m, s, measured, opt);
    r.discord_one_sided = one.discord;
    r.classical_one_sided = r.total - one.discord;
    r.discord_basis = one.basis;

    const TwoSidedResult two = two_sided(m, opt);
    r.quantum = clamp_measure(r.total - two.classical, "two-sided quantum correlation");
    r.classical = r.total - r.quantum;
    r.basis_a = two.basis_a;
    r.basis_b = two.basis_b;

    r.concurrence = concurrence_of(m);
    return r;
}

}  // namespace qcorr
