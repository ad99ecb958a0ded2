#pragma once

// Test-only reference computations. These deliberately avoid the library's
// fast paths: joint distributions are built from full 4-vectors, the
// optimizations are plain dense grids and concurrence goes through
// sqrt(rho) instead of the R matrix.

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace qcorr::testing {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline constexpr double kPi = std::numbers::pi;

// rho = G G^dagger / Tr with a complex Ginibre G of the given rank.
inline Eigen::MatrixXcd random_density(std::mt19937_64& rng, int dim, int rank = -1) {
    if (rank < 0) rank = dim;
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXcd g(dim, rank);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < rank; ++j) g(i, j) = Complex{n(rng), n(rng)};
    }
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

inline Mat2 random_unitary2(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Mat2 g;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) g(i, j) = Complex{n(rng), n(rng)};
    }
    Eigen::HouseholderQR<Mat2> qr(g);
    return qr.householderQ();
}

inline Eigen::Vector2cd basis_vector(double theta, double phi, int outcome) {
    if (outcome == 0) return {Complex{std::cos(theta), 0.0}, std::polar(std::sin(theta), phi)};
    return {std::polar(std::sin(theta), -phi), Complex{-std::cos(theta), 0.0}};
}

inline double plogp_sum(std::initializer_list<double> ps) {
    double h = 0.0;
    for (double p : ps) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

inline double binary_entropy(double x) { return plogp_sum({x, 1.0 - x}); }

inline double naive_entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double v = es.eigenvalues()(i);
        if (v > 1e-14) s -= v * std::log2(v);
    }
    return s;
}

// I_C of the outcome statistics of (theta_a, phi_a) x (theta_b, phi_b).
inline double naive_classical_mi(const Mat4& rho, double ta, double pa, double tb, double pb) {
    double p[2][2];
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Eigen::Vector4cd v;
            const Eigen::Vector2cd a = basis_vector(ta, pa, i);
            const Eigen::Vector2cd b = basis_vector(tb, pb, j);
            v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
            p[i][j] = std::max(0.0, (v.adjoint() * rho * v)(0, 0).real());
        }
    }
    return plogp_sum({p[0][0] + p[0][1], p[1][0] + p[1][1]}) + plogp_sum({p[0][0] + p[1][0], p[0][1] + p[1][1]}) -
           plogp_sum({p[0][0], p[0][1], p[1][0], p[1][1]});
}

// max over a g^4 angle grid of I_C.
inline double dense_grid_K(const Mat4& rho, int g) {
    double best = 0.0;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) {
            for (int k = 0; k < g; ++k) {
                for (int l = 0; l < g; ++l) {
                    best = std::max(best, naive_classical_mi(rho, kPi * i / (g - 1), 2 * kPi * j / g,
                                                             kPi * k / (g - 1), 2 * kPi * l / g));
                }
            }
        }
    }
    return best;
}

// Dense grid followed by a local grid search around the incumbent.
template <class F>
inline double zoom_maximize(F&& f, int dims, int g) {
    std::vector<double> span(dims);
    for (int d = 0; d < dims; ++d) span[d] = (d % 2 == 0) ? kPi / (g - 1) : 2 * kPi / g;
    std::vector<double> best_x(dims, 0.0);
    double best = -1e300;
    std::vector<int> idx(dims, 0);
    std::vector<double> x(dims);
    while (true) {
        for (int d = 0; d < dims; ++d) x[d] = idx[d] * span[d];
        const double v = f(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
        int d = 0;
        while (d < dims && ++idx[d] == g) idx[d++] = 0;
        if (d == dims) break;
    }
    // Pattern search: move while a neighbour improves, shrink otherwise.
    constexpr int kLocal = 5;
    for (int round = 0; round < 2000 && span[0] > 1e-9; ++round) {
        const std::vector<double> centre = best_x;
        std::fill(idx.begin(), idx.end(), 0);
        bool moved = false;
        while (true) {
            for (int d = 0; d < dims; ++d) x[d] = centre[d] + (idx[d] - kLocal / 2) * span[d] / 2;
            const double v = f(x);
            if (v > best) {
                best = v;
                best_x = x;
                moved = true;
            }
            int d = 0;
            while (d < dims && ++idx[d] == kLocal) idx[d++] = 0;
            if (d == dims) break;
        }
        if (!moved) {
            for (double& s : span) s *= 0.5;
        }
    }
    return best;
}

inline double zoom_K(const Mat4& rho, int g) {
    return zoom_maximize([&](const std::vector<double>& x) { return naive_classical_mi(rho, x[0], x[1], x[2], x[3]); },
                         4, g);
}

inline Mat2 naive_marginal(const Mat4& rho, bool keep_a) {
    Mat2 out = Mat2::Zero();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int t = 0; t < 2; ++t) out(x, y) += keep_a ? rho(2 * x + t, 2 * y + t) : rho(2 * t + x, 2 * t + y);
    return out;
}

inline double naive_mutual(const Mat4& rho) {
    return naive_entropy(naive_marginal(rho, true)) + naive_entropy(naive_marginal(rho, false)) - naive_entropy(rho);
}

// J after measuring B in (theta, phi). Builds the post-measurement state
// (I (x) Pi) rho (I (x) Pi) explicitly.
inline double naive_j_b(const Mat4& rho, double theta, double phi) {
    double cond = 0.0;
    for (int o = 0; o < 2; ++o) {
        const Eigen::Vector2cd v = basis_vector(theta, phi, o);
        const Mat2 pi = v * v.adjoint();
        Mat4 proj = Mat4::Zero();
        proj.block<2, 2>(0, 0) = pi;
        proj.block<2, 2>(2, 2) = pi;
        const Mat4 post = proj * rho * proj;
        const double q = post.trace().real();
        if (q < 1e-14) continue;
        cond += q * naive_entropy(Eigen::MatrixXcd(post / q));
    }
    return naive_entropy(naive_marginal(rho, true)) - cond;
}

// One-sided discord measuring B, maximized over a g x g angle grid.
inline double dense_grid_discord_b(const Mat4& rho, int g) {
    double best = -1.0;
    for (int i = 0; i < g; ++i) {
        for (int j = 0; j < g; ++j) best = std::max(best, naive_j_b(rho, kPi * i / (g - 1), 2 * kPi * j / g));
    }
    return naive_mutual(rho) - best;
}

inline double zoom_discord_b(const Mat4& rho, int g) {
    return naive_mutual(rho) -
           zoom_maximize([&](const std::vector<double>& x) { return naive_j_b(rho, x[0], x[1]); }, 2, g);
}

// Concurrence from the eigenvalues of sqrt(rho) rho~ sqrt(rho).
inline double concurrence_sqrt_route(const Mat4& rho) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
    Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Mat4 sqrt_rho = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    Mat4 yy = Mat4::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Mat4 flipped = yy * rho.conjugate() * yy;
    Mat4 m = sqrt_rho * flipped * sqrt_rho;
    m = 0.5 * (m + m.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Mat4> es2(m);
    Eigen::Vector4d l = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    std::sort(l.data(), l.data() + 4, std::greater<>());
    return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

}  // namespace qcorr::testing
