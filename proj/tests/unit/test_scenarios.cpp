#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/scenarios.hpp"

using namespace qcorr;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ScenarioConfig config(ScenarioKind kind, double a, std::vector<double> grid, std::vector<Bipartition> pairs) {
    ScenarioConfig c;
    c.scenario = kind;
    c.a = a;
    c.p_grid = std::move(grid);
    c.bipartitions = std::move(pairs);
    return c;
}

}  // namespace

TEST_CASE("initial state family") {
    const CMatrix singlet = initial_state(1.0).matrix();
    Eigen::Vector4cd psi(0, 1, -1, 0);
    psi /= std::sqrt(2.0);
    CHECK(max_abs(singlet - psi * psi.adjoint()) < 1e-15);
    CHECK(max_abs(initial_state(1e-9).matrix() - CMatrix::Identity(4, 4) / 4.0) < 1e-9);
    CHECK_THROWS_AS(initial_state(0.0), ConfigError);
    CHECK_THROWS_AS(initial_state(1.5), ConfigError);
    const InitialStateParams c = initial_params(0.4);
    CHECK(c.a_plus == doctest::Approx(0.6));
    CHECK(c.a_minus == doctest::Approx(1.4));
    CHECK(c.b_plus == doctest::Approx(-0.8));
    CHECK(c.b_minus == 0.0);
}

TEST_CASE("scenario names and channels") {
    CHECK(parse_scenario("ape") == ScenarioKind::APE);
    CHECK(parse_scenario("PPE") == ScenarioKind::PPE);
    CHECK_THROWS_AS(parse_scenario("xyz"), ConfigError);
    CHECK(channels_for(ScenarioKind::ABE).b == ChannelKind::bit_flip(0));
    CHECK_THROWS_AS(channels_for(ScenarioKind::Custom), ConfigError);
    CHECK_THROWS_AS(analytic_reduced(ScenarioKind::Custom, Bipartition::AB, 0.4, 0.5), ConfigError);
}

TEST_CASE("printed APE matrices at reference points") {
    for (double a : {0.3, 0.4, 1.0}) {
        CHECK(max_abs(analytic_reduced(ScenarioKind::APE, Bipartition::AB, a, 0.0).matrix - initial_state(a).matrix()) <
              1e-15);
    }
    CMatrix want = CMatrix::Zero(4, 4);
    want(0, 0) = 1.0;
    want.block(1, 1, 2, 2).setConstant(0.5);
    want /= 2.0;
    const AnalyticReduced aea = analytic_reduced(ScenarioKind::APE, Bipartition::AEA, 0.4, 0.5);
    CHECK(max_abs(aea.matrix - want) < 1e-15);
    CHECK(aea.validity.valid());
}

TEST_CASE("printed ABE traces document the appendix inconsistency") {
    for (double p : {0.0, 0.25, 0.5, 0.8, 1.0}) {
        const AnalyticReduced ab = analytic_reduced(ScenarioKind::ABE, Bipartition::AB, 0.4, p);
        CHECK(ab.matrix.trace().real() == doctest::Approx(p * p + 1 - p).epsilon(1e-14));
        const AnalyticReduced bea = analytic_reduced(ScenarioKind::ABE, Bipartition::BEA, 0.4, p);
        CHECK(bea.matrix.trace().real() == doctest::Approx((1 + 2 * p) / 2).epsilon(1e-14));
    }
    CHECK(analytic_reduced(ScenarioKind::ABE, Bipartition::AB, 0.4, 0.5).matrix.trace().real() ==
          doctest::Approx(0.75));
    CHECK_FALSE(analytic_reduced(ScenarioKind::ABE, Bipartition::AB, 0.4, 0.5).validity.valid());
}

TEST_CASE("printed APE AE_B has a constant trace of 3/4") {
    for (double p : {0.0, 0.5, 1.0}) {
        const AnalyticReduced aeb = analytic_reduced(ScenarioKind::APE, Bipartition::AEB, 0.4, p);
        CHECK(aeb.matrix.trace().real() == doctest::Approx(0.75).epsilon(1e-14));
    }
}

TEST_CASE("discrepancy report") {
    const std::vector<double> as{0.4, 1.0};
    const std::vector<double> grid = uniform_grid(0.0, 1.0, 11);

    auto flagged_pairs = [&](ScenarioKind kind) {
        std::set<Bipartition> out;
        const auto rows = discrepancy_report(kind, as, grid);
        CHECK(rows.size() == as.size() * grid.size() * 6);
        for (const DiscrepancyRow& r : rows) {
            if (r.flagged()) out.insert(r.pair);
            CHECK_FALSE((r.note.empty() && r.flagged()));
        }
        return out;
    };

    CHECK(flagged_pairs(ScenarioKind::ABE) == std::set<Bipartition>{Bipartition::AB, Bipartition::BEA});
    CHECK(flagged_pairs(ScenarioKind::APE) == std::set<Bipartition>{Bipartition::AEB});
    CHECK(flagged_pairs(ScenarioKind::PPE) == std::set<Bipartition>{Bipartition::BEA, Bipartition::EAEB});

    for (const DiscrepancyRow& r : discrepancy_report(ScenarioKind::PPE, {0.4}, {0.5})) {
        if (r.pair == Bipartition::BEA) {
            CHECK(r.printed_valid);
            CHECK(r.note == "matches only with the two factors swapped");
        }
        if (r.pair == Bipartition::EAEB) CHECK(r.printed_valid);
    }
}

TEST_CASE("uniform grid and config validation") {
    CHECK(uniform_grid(0.0, 1.0, 1) == std::vector<double>{0.0});
    const auto g = uniform_grid(0.0, 1.0, 101);
    CHECK(g.size() == 101);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[50] == 0.5);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 0), ConfigError);
    CHECK_THROWS_AS(uniform_grid(0.5, 1.5, 3), ConfigError);

    ScenarioConfig c = config(ScenarioKind::APE, 0.4, {0.0, 0.5}, {Bipartition::AB});
    CHECK_NOTHROW(c.validate());
    c.p_grid = {0.5, 0.5};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.p_grid = {0.5};
    c.bipartitions = {Bipartition::AB, Bipartition::AB};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.bipartitions = {Bipartition::AB};
    c.scenario = ScenarioKind::Custom;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.channel_a = ChannelKind::phase_flip();
    c.channel_b = ChannelKind::bit_flip(1);
    CHECK_NOTHROW(c.validate());
    c.a = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("sweep at p = 0 reproduces the single-point values") {
    const auto recs = sweep(config(ScenarioKind::APE, 0.4, {0.0}, {Bipartition::AB}));
    REQUIRE(recs.size() == 1);
    const CorrelationResult direct = full_result(initial_state(0.4));
    CHECK(recs[0].result.total == direct.total);
    CHECK(recs[0].result.classical == direct.classical);
    CHECK(recs[0].result.quantum == direct.quantum);
    CHECK(std::abs(recs[0].result.classical - 0.118709100769308) < 1e-9);
}

TEST_CASE("sweep of ABE Bell state at p = 1") {
    const auto recs = sweep(config(ScenarioKind::ABE, 1.0, {1.0}, {Bipartition::BEA}));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].result.concurrence == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(recs[0].result.total == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("PPE keeps the AB classical correlation constant") {
    const auto recs = sweep(config(ScenarioKind::PPE, 0.4, uniform_grid(0.0, 1.0, 11), {Bipartition::AB}));
    REQUIRE(recs.size() == 11);
    for (const auto& r : recs) CHECK(std::abs(r.result.classical - recs.front().result.classical) < 2e-3);
}

TEST_CASE("sweep ordering, oracle column and determinism") {
    ScenarioConfig c = config(ScenarioKind::APE, 0.4, {0.0, 0.5, 1.0}, {Bipartition::EAEB, Bipartition::AB});
    c.oracle_check = true;
    c.optimizer.grid_points_per_angle = 8;
    c.threads = 1;
    const auto serial = sweep(c);
    REQUIRE(serial.size() == 6);
    CHECK(serial[0].p == 0.0);
    CHECK(serial[0].bipartition == Bipartition::EAEB);
    CHECK(serial[1].bipartition == Bipartition::AB);
    CHECK(serial[5].p == 1.0);
    for (const auto& r : serial) {
        REQUIRE(r.oracle_max_abs_dev.has_value());
        CHECK(*r.oracle_max_abs_dev < 1e-12);
    }
    c.threads = 3;
    const auto threaded = sweep(c);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].result.classical == threaded[i].result.classical);
        CHECK(serial[i].result.discord_one_sided == threaded[i].result.discord_one_sided);
        CHECK(serial[i].result.basis_a == threaded[i].result.basis_a);
    }
}

TEST_CASE("oracle column is empty for custom scenarios") {
    ScenarioConfig c = config(ScenarioKind::Custom, 0.4, {0.3}, {Bipartition::AB});
    c.channel_a = ChannelKind::phase_flip();
    c.channel_b = ChannelKind::amplitude_damping();
    c.oracle_check = true;
    c.optimizer.grid_points_per_angle = 8;
    const auto recs = sweep(c);
    REQUIRE(recs.size() == 1);
    CHECK_FALSE(recs[0].oracle_max_abs_dev.has_value());
}

TEST_CASE("bit flip and bit-phase flip give the same correlations") {
    for (double p : {0.2, 0.7}) {
        for (Bipartition pair : {Bipartition::AB, Bipartition::BEB, Bipartition::BEA}) {
            ScenarioConfig c = config(ScenarioKind::Custom, 1.0, {p}, {pair});
            c.channel_a = ChannelKind::amplitude_damping();
            c.channel_b = ChannelKind::bit_flip(0);
            c.optimizer.grid_points_per_angle = 12;
            const auto r0 = sweep(c)[0].result;
            c.channel_b = ChannelKind::bit_flip(1);
            const auto r1 = sweep(c)[0].result;
            CHECK(std::abs(r0.total - r1.total) < 1e-10);
            CHECK(std::abs(r0.classical - r1.classical) < 1e-6);
            CHECK(std::abs(r0.discord_one_sided - r1.discord_one_sided) < 1e-6);
            CHECK(std::abs(r0.concurrence - r1.concurrence) < 1e-10);
        }
    }
}
