#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/scenarios.hpp"

using namespace qcorr;
using qcorr::testing::random_density;

namespace {

const std::vector<ChannelKind>& all_kinds() {
    static const std::vector<ChannelKind> kinds{ChannelKind::amplitude_damping(), ChannelKind::phase_damping(),
                                                ChannelKind::bit_flip(0), ChannelKind::bit_flip(1),
                                                ChannelKind::phase_flip()};
    return kinds;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::Vector4cd column(const Isometry& iso, int c) { return iso.map.col(c); }

}  // namespace

TEST_CASE("amplitude damping isometry examples") {
    const Isometry id = isometry_for(ChannelKind::amplitude_damping(), 0.0);
    CHECK(max_abs(column(id, 0) - Eigen::Vector4cd(1, 0, 0, 0)) < 1e-15);
    CHECK(max_abs(column(id, 1) - Eigen::Vector4cd(0, 0, 1, 0)) < 1e-15);
    const Isometry decay = isometry_for(ChannelKind::amplitude_damping(), 1.0);
    CHECK(max_abs(column(decay, 0) - Eigen::Vector4cd(1, 0, 0, 0)) < 1e-15);
    CHECK(max_abs(column(decay, 1) - Eigen::Vector4cd(0, 1, 0, 0)) < 1e-15);
}

TEST_CASE("bit flip isometry at p = 1/2") {
    const double r = 1.0 / std::sqrt(2.0);
    const Isometry iso = isometry_for(ChannelKind::bit_flip(0), 0.5);
    CHECK(max_abs(column(iso, 0) - Eigen::Vector4cd(r, 0, 0, r)) < 1e-15);
    CHECK(max_abs(column(iso, 1) - Eigen::Vector4cd(0, r, r, 0)) < 1e-15);
}

TEST_CASE("Kraus examples") {
    const KrausPair pd = kraus_for(ChannelKind::phase_damping(), 0.0);
    CHECK(max_abs(pd.first - Eigen::Matrix2cd::Identity()) < 1e-15);
    CHECK(max_abs(pd.second) < 1e-15);
    for (double p : {0.0, 0.2, 0.5, 1.0}) {
        const KrausPair bf = kraus_for(ChannelKind::bit_flip(0), p);
        CHECK(max_abs(bf.first - std::sqrt(p) * Eigen::Matrix2cd::Identity()) < 1e-15);
        CHECK(max_abs(bf.second - std::sqrt(1.0 - p) * pauli::x()) < 1e-15);
    }
}

TEST_CASE("channel parameter and index validation") {
    for (const ChannelKind& k : all_kinds()) {
        CHECK_THROWS_AS(isometry_for(k, -0.01), ConfigError);
        CHECK_THROWS_AS(isometry_for(k, 1.01), ConfigError);
        CHECK_THROWS_AS(kraus_for(k, std::nan("")), ConfigError);
    }
    CHECK_THROWS_AS(ChannelKind::bit_flip(2), ConfigError);
    CHECK(parse_channel("bpf") == ChannelKind::bit_flip(1));
    CHECK(parse_channel("amplitude_damping") == ChannelKind::amplitude_damping());
    CHECK_THROWS_AS(parse_channel("depolarizing"), ConfigError);
    CHECK_THROWS_AS(evolve(DensityMatrix(CMatrix::Identity(2, 2) / 2.0), ChannelKind::amplitude_damping(),
                           ChannelKind::phase_damping(), 0.5),
                    ConfigError);
}

TEST_CASE("isometry and Kraus completeness") {
    for (const ChannelKind& k : all_kinds()) {
        for (double p : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
            const Isometry v = isometry_for(k, p);
            CHECK(max_abs(v.map.adjoint() * v.map - Eigen::Matrix2cd::Identity()) < 1e-12);
            const KrausPair g = kraus_for(k, p);
            const Eigen::Matrix2cd sum = g.first.adjoint() * g.first + g.second.adjoint() * g.second;
            CHECK(max_abs(sum - Eigen::Matrix2cd::Identity()) < 1e-12);
        }
    }
}

TEST_CASE("Stinespring dilation agrees with the Kraus form") {
    std::mt19937_64 rng(17);
    for (const ChannelKind& k : all_kinds()) {
        for (double p : {0.0, 0.3, 0.8, 1.0}) {
            const Isometry v = isometry_for(k, p);
            const KrausPair g = kraus_for(k, p);
            for (int trial = 0; trial < 10; ++trial) {
                const Eigen::Matrix2cd rho = random_density(rng, 2);
                const Eigen::Matrix4cd big = v.map * rho * v.map.adjoint();
                Eigen::Matrix2cd env_traced;
                for (int s = 0; s < 2; ++s)
                    for (int t = 0; t < 2; ++t) env_traced(s, t) = big(2 * s, 2 * t) + big(2 * s + 1, 2 * t + 1);
                const Eigen::Matrix2cd kraus =
                    g.first * rho * g.first.adjoint() + g.second * rho * g.second.adjoint();
                CHECK(max_abs(env_traced - kraus) < 1e-12);
            }
        }
    }
}

TEST_CASE("each channel at its identity point leaves the system untouched") {
    std::mt19937_64 rng(23);
    for (const ChannelKind& ka : all_kinds()) {
        for (const ChannelKind& kb : all_kinds()) {
            const DensityMatrix rho0(random_density(rng, 4));
            const DensityMatrix total = evolve(rho0, ka, identity_point(ka), kb, identity_point(kb));
            CHECK(max_abs(reduced(total, Bipartition::AB).matrix() - rho0.matrix()) < 1e-13);
        }
    }
}

TEST_CASE("APE at p = 0 returns the initial state") {
    const DensityMatrix rho0 = initial_state(0.4);
    const DensityMatrix total = evolve(rho0, ChannelKind::amplitude_damping(), ChannelKind::phase_damping(), 0.0);
    CHECK(max_abs(reduced(total, Bipartition::AB).matrix() - rho0.matrix()) < 1e-15);
    CMatrix vac = CMatrix::Zero(4, 4);
    vac(0, 0) = 1.0;
    CHECK(max_abs(reduced(total, Bipartition::EAEB).matrix() - vac) < 1e-15);
}

TEST_CASE("APE AE_A follows the pure-state projector family") {
    for (double a : {0.4, 1.0}) {
        for (double p : {0.0, 0.3, 0.5, 0.9, 1.0}) {
            const double q = 1.0 - p;
            CMatrix want = CMatrix::Zero(4, 4);
            want(0, 0) = 1.0;
            want(1, 1) = p;
            want(2, 2) = q;
            want(1, 2) = want(2, 1) = std::sqrt(p * q);
            want /= 2.0;
            const DensityMatrix total =
                evolve(initial_state(a), ChannelKind::amplitude_damping(), ChannelKind::phase_damping(), p);
            CHECK(max_abs(reduced(total, Bipartition::AEA).matrix() - want) < 1e-14);
        }
    }
}

TEST_CASE("APE AB at p = 1/2 matches the closed form") {
    const double a = 0.4, p = 0.5, q = 0.5;
    const double ap = 1 - a, am = 1 + a, bp = -2 * a;
    CMatrix want = CMatrix::Zero(4, 4);
    want(0, 0) = ap + p * am;
    want(1, 1) = am + p * ap;
    want(2, 2) = q * am;
    want(3, 3) = q * ap;
    want(1, 2) = want(2, 1) = q * bp;
    want /= 4.0;
    const DensityMatrix total =
        evolve(initial_state(a), ChannelKind::amplitude_damping(), ChannelKind::phase_damping(), p);
    CHECK(max_abs(reduced(total, Bipartition::AB).matrix() - want) < 1e-14);
}

TEST_CASE("ABE with a Bell state moves all entanglement to B E_A") {
    const DensityMatrix total =
        evolve(initial_state(1.0), ChannelKind::amplitude_damping(), ChannelKind::bit_flip(0), 1.0);
    const DensityMatrix bea = reduced(total, Bipartition::BEA);
    CHECK(std::abs((bea.matrix() * bea.matrix()).trace().real() - 1.0) < 1e-13);
    CHECK(concurrence(bea) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evolution preserves purity of the global state") {
    std::mt19937_64 rng(29);
    for (const ChannelKind& ka : all_kinds()) {
        for (const ChannelKind& kb : all_kinds()) {
            const DensityMatrix rho0(random_density(rng, 4, 1));
            const DensityMatrix total = evolve(rho0, ka, kb, 0.37);
            CHECK(std::abs((total.matrix() * total.matrix()).trace().real() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("AE_A and BE_B under APE do not depend on a") {
    for (double p : {0.2, 0.6}) {
        const auto kinds = channels_for(ScenarioKind::APE);
        const DensityMatrix t1 = evolve(initial_state(0.4), kinds.a, kinds.b, p);
        const DensityMatrix t2 = evolve(initial_state(0.9), kinds.a, kinds.b, p);
        for (Bipartition pair : {Bipartition::AEA, Bipartition::BEB}) {
            CHECK(max_abs(reduced(t1, pair).matrix() - reduced(t2, pair).matrix()) < 1e-14);
        }
    }
}

TEST_CASE("reduced pairs are ordered as named") {
    std::mt19937_64 rng(31);
    const DensityMatrix total(random_density(rng, 16));
    const CMatrix bea = reduced(total, Bipartition::BEA).matrix();
    // <b ea| rho |b' ea'> summed over a and eb.
    Complex want{0.0, 0.0};
    for (int a = 0; a < 2; ++a)
        for (int eb = 0; eb < 2; ++eb) want += total.matrix()(8 * a + 4 * 1 + 2 * 0 + eb, 8 * a + 4 * 0 + 2 * 1 + eb);
    CHECK(std::abs(bea(2, 1) - want) < 1e-15);
}
