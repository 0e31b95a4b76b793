#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "netgood/errors.hpp"
#include "netgood/game_model.hpp"

using namespace netgood;

namespace {

const double kInvE = 1.0 / std::exp(1.0);

GameSpec symmetric_pair(double g) {
    return make_unit_exponential_game(
        DependenceMatrix::from_matrix(Matrix::from_rows({{0, g}, {g, 0}})));
}

// Hub-and-spoke network: the center depends on each leaf with weight g_out,
// each leaf depends on the center with weight g_in.
GameSpec star_game(double g_in, double g_out = 0.2) {
    Matrix g(4, 4, 0.0);
    for (int k = 1; k < 4; ++k) {
        g(0, k) = g_out;
        g(k, 0) = g_in;
    }
    return make_unit_exponential_game(DependenceMatrix::from_matrix(std::move(g)));
}

}  // namespace

TEST_CASE("dependence matrix validation") {
    CHECK_THROWS_AS(DependenceMatrix::from_matrix(Matrix::from_rows({{0.1, 0}, {0, 0}})),
                    ValidationError);
    CHECK_NOTHROW(DependenceMatrix::from_matrix(Matrix::from_rows({{0, 1}, {-1, 0}})));
    const auto g = DependenceMatrix::zero(3);
    CHECK(g.size() == 3);
    CHECK(g.weight(0, 1) == 0.0);
}

TEST_CASE("benefit families") {
    const auto expo = BenefitFunction::exponential(1.0);
    CHECK(expo.value(0.0) == doctest::Approx(0.0));
    CHECK(expo.derivative(0.0) == doctest::Approx(1.0));
    CHECK(expo.derivative_inverse(kInvE) == doctest::Approx(1.0));
    CHECK(expo.value(-1.0) == doctest::Approx(1.0 - std::exp(1.0)));  // defined below zero

    const auto logf = BenefitFunction::logarithmic(2.0);
    CHECK(logf.value(0.0) == doctest::Approx(0.0));
    CHECK(logf.derivative(0.0) == doctest::Approx(2.0));
    CHECK(logf.derivative_inverse(1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(logf.value(-1.0), DomainError);
    CHECK_THROWS_AS(logf.derivative(-1.5), DomainError);

    CHECK_FALSE(expo.marginal_in_range(0.0));
    CHECK_FALSE(expo.marginal_in_range(-0.5));
    CHECK_THROWS_AS(expo.derivative_inverse(0.0), DomainError);

    SUBCASE("derivative matches central finite differences") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> pdist(0.3, 3.0);
        std::uniform_real_distribution<double> ydist(0.0, 4.0);
        for (int trial = 0; trial < 100; ++trial) {
            const auto b = trial % 2 == 0 ? BenefitFunction::exponential(pdist(rng))
                                          : BenefitFunction::logarithmic(pdist(rng));
            const double y = ydist(rng);
            const double h = 1e-5;
            const double fd = (b.value(y + h) - b.value(y - h)) / (2 * h);
            CHECK(b.derivative(y) == doctest::Approx(fd).epsilon(1e-6));
            // strict concavity: derivative decreasing
            CHECK(b.derivative(y + 0.1) < b.derivative(y));
            // inverse round trip
            CHECK(b.derivative_inverse(b.derivative(y)) == doctest::Approx(y).epsilon(1e-9));
        }
    }
}

TEST_CASE("utility") {
    const GameSpec game = symmetric_pair(0.5);
    const Vector x = {2.0 / 3, 2.0 / 3};
    const double expected = 1.0 - std::exp(-1.0) - (2.0 / 3) * kInvE;
    CHECK(utility(game, x, 0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(utility(game, x, 1) == doctest::Approx(expected).epsilon(1e-14));

    CHECK(utility(game, {0, 0}, 0) == doctest::Approx(0.0));

    const GameSpec solo = make_unit_exponential_game(DependenceMatrix::zero(1));
    CHECK(utility(solo, {1.0}, 0) == doctest::Approx(1.0 - 2.0 * kInvE).epsilon(1e-14));
}

TEST_CASE("standalone target") {
    CHECK(standalone_target(symmetric_pair(0.5)) == Vector{1.0, 1.0});

    const auto g1 = DependenceMatrix::zero(1);
    const GameSpec flat = make_game(g1, {BenefitFunction::exponential(1.0)}, {1.0});
    CHECK(standalone_target(flat)[0] == doctest::Approx(0.0));

    const GameSpec logg = make_game(g1, {BenefitFunction::logarithmic(2.0)}, {1.0});
    CHECK(standalone_target(logg)[0] == doctest::Approx(1.0));
}

TEST_CASE("best response") {
    const GameSpec game = symmetric_pair(0.5);
    CHECK(best_response(game, 0, {0, 2.0 / 3}) == doctest::Approx(2.0 / 3));
    CHECK(best_response(game, 0, {0, 0}) == doctest::Approx(1.0));

    const GameSpec strong = symmetric_pair(2.0);
    CHECK(best_response(strong, 0, {0, 1.0}) == doctest::Approx(0.0));
}

TEST_CASE("equilibrium = LCP solution = best-reply fixed point") {
    const GameSpec game = symmetric_pair(0.5);
    const auto inst = nash_lcp(game);

    const Vector eq = {2.0 / 3, 2.0 / 3};
    LCPSolution sol;
    sol.x = eq;
    sol.w = inst.m * eq;
    for (size_t i = 0; i < sol.w.size(); ++i) sol.w[i] += inst.q[i];
    CHECK(verify_solution(inst, sol, 1e-12));
    for (int i = 0; i < 2; ++i)
        CHECK(best_response(game, i, eq) == doctest::Approx(eq[i]).epsilon(1e-14));

    // a non-equilibrium point fails both characterizations
    const Vector off = {0.5, 0.5};
    LCPSolution bad;
    bad.x = off;
    bad.w = inst.m * off;
    for (size_t i = 0; i < bad.w.size(); ++i) bad.w[i] += inst.q[i];
    CHECK_FALSE(verify_solution(inst, bad, 1e-9));
    CHECK(best_response(game, 0, off) != doctest::Approx(off[0]).epsilon(1e-9));
}

TEST_CASE("nash LCP assembly") {
    const auto inst = nash_lcp(symmetric_pair(0.5));
    CHECK(inst.m == Matrix::from_rows({{1, 0.5}, {0.5, 1}}));
    CHECK(inst.q == Vector{-1.0, -1.0});

    const auto zero_inst = nash_lcp(make_unit_exponential_game(DependenceMatrix::zero(3)));
    CHECK(zero_inst.m == Matrix::identity(3));
    CHECK(zero_inst.q == Vector{-1.0, -1.0, -1.0});

    const auto comp = nash_lcp(symmetric_pair(-2.0));
    CHECK(comp.m == Matrix::from_rows({{1, -2}, {-2, 1}}));
    CHECK(comp.q == Vector{-1.0, -1.0});
}

TEST_CASE("perceived costs on the hub-and-spoke network") {
    const auto ones = WelfareWeights::ones(4);

    SUBCASE("symmetric weights 0.2") {
        const GameSpec game = star_game(0.2);
        const Vector pc = perceived_costs(game, ones, game.g.weights());
        // closed form: pc_center = c (1 - 3 g_in) / (1 - 3 g_in g_out)
        CHECK(pc[0] == doctest::Approx(0.16721792780520103).epsilon(1e-12));
        for (int k = 1; k < 4; ++k)
            CHECK(pc[k] == doctest::Approx(0.3344358556104021).epsilon(1e-12));
        // two-decimal values reported for this network
        CHECK(std::round(pc[0] * 100) / 100 == doctest::Approx(0.17));
        CHECK(std::round(pc[1] * 100) / 100 == doctest::Approx(0.33));
    }
    SUBCASE("stronger influence 0.3") {
        const GameSpec game = star_game(0.3);
        const Vector pc = perceived_costs(game, ones, game.g.weights());
        CHECK(pc[0] == doctest::Approx(0.044863346484322275).epsilon(1e-12));
        for (int k = 1; k < 4; ++k)
            CHECK(pc[k] == doctest::Approx(0.35890677187457787).epsilon(1e-12));
        CHECK(std::round(pc[0] * 100) / 100 == doctest::Approx(0.04));
        CHECK(std::round(pc[1] * 100) / 100 == doctest::Approx(0.36));
    }
    SUBCASE("empty network: perceived costs are the costs") {
        const GameSpec game = make_unit_exponential_game(DependenceMatrix::zero(4));
        const Vector pc = perceived_costs(game, ones, game.g.weights());
        for (int i = 0; i < 4; ++i) CHECK(pc[i] == doctest::Approx(kInvE).epsilon(1e-15));
    }
}

TEST_CASE("pareto target") {
    SUBCASE("no externalities: target equals the standalone target") {
        const GameSpec game = make_unit_exponential_game(DependenceMatrix::zero(3));
        const Vector q = pareto_target(game, WelfareWeights::ones(3));
        for (double v : q) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("hub-and-spoke center target") {
        const GameSpec game = star_game(0.2);
        const Vector q = pareto_target(game, WelfareWeights::ones(4));
        CHECK(q[0] == doctest::Approx(1.7884573603642702).epsilon(1e-12));
        CHECK(q[0] == doctest::Approx(1.788).epsilon(1e-3));
        CHECK(q[1] == doctest::Approx(1.0953101798043248).epsilon(1e-12));
    }
    SUBCASE("symmetric pair closed form") {
        const GameSpec game = symmetric_pair(0.5);
        const Vector q = pareto_target(game, WelfareWeights::ones(2));
        const double expected = 1.0 + std::log(1.5);
        CHECK(q[0] == doctest::Approx(expected).epsilon(1e-12));
        CHECK(q[1] == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("nonpositive perceived cost reports the failing agents") {
        // g_in = 0.4 drives the center's perceived cost negative.
        const GameSpec game = star_game(0.4);
        CHECK_THROWS_AS(pareto_target(game, WelfareWeights::ones(4)),
                        PerceivedCostOutOfRange);
        try {
            pareto_target(game, WelfareWeights::ones(4));
        } catch (const PerceivedCostOutOfRange& e) {
            CHECK(e.agents == std::vector<int>{0});
        }
    }
}

TEST_CASE("lambda scaling leaves targets unchanged") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> wdist(0.0, 0.3);
    std::uniform_real_distribution<double> ldist(0.2, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 4;
        Matrix g(n, n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) g(i, j) = wdist(rng);
        const GameSpec game =
            make_unit_exponential_game(DependenceMatrix::from_matrix(std::move(g)));
        Vector lam(n);
        for (double& v : lam) v = ldist(rng);
        Vector scaled = lam;
        for (double& v : scaled) v *= 7.25;

        // Uneven weights can push a perceived cost nonpositive; the scaled
        // run must then fail for the same agents.
        try {
            const Vector q1 = pareto_target(game, WelfareWeights::from_vector(lam));
            const Vector q2 = pareto_target(game, WelfareWeights::from_vector(scaled));
            CHECK(inf_dist(q1, q2) < 1e-12);
        } catch (const PerceivedCostOutOfRange& e1) {
            try {
                pareto_target(game, WelfareWeights::from_vector(scaled));
                CHECK_MESSAGE(false, "scaled weights unexpectedly admitted a target");
            } catch (const PerceivedCostOutOfRange& e2) {
                CHECK(e1.agents == e2.agents);
            }
        }
    }
}

TEST_CASE("coalition-modified matrix") {
    const GameSpec game = star_game(0.2);

    SUBCASE("grand coalition keeps every edge") {
        const auto gc = coalition_modified_matrix(game.g, CoalitionPartition::grand(4));
        CHECK(gc.weights() == game.g.weights());
    }
    SUBCASE("singletons cut every edge") {
        const auto gc = coalition_modified_matrix(game.g, CoalitionPartition::singletons(4));
        CHECK(gc.weights() == Matrix(4, 4, 0.0));
    }
    SUBCASE("center versus leaves") {
        const auto part = CoalitionPartition::from_blocks({{0}, {1, 2, 3}}, 4);
        const auto gc = coalition_modified_matrix(game.g, part);
        // all center-leaf edges cross the partition; leaf-leaf edges are absent
        CHECK(gc.weights() == Matrix(4, 4, 0.0));
    }
    SUBCASE("pair plus singleton") {
        const auto part = CoalitionPartition::from_blocks({{0, 1}, {2, 3}}, 4);
        const auto gc = coalition_modified_matrix(game.g, part);
        CHECK(gc.weight(0, 1) == doctest::Approx(0.2));
        CHECK(gc.weight(1, 0) == doctest::Approx(0.2));
        CHECK(gc.weight(0, 2) == 0.0);
        CHECK(gc.weight(2, 0) == 0.0);
    }
}

TEST_CASE("semi-cooperative targets degenerate correctly") {
    const GameSpec game = star_game(0.2);
    const auto ones = WelfareWeights::ones(4);

    const Vector qbar = standalone_target(game);
    const Vector q_singletons =
        semicoop_target(game, CoalitionPartition::singletons(4), ones);
    CHECK(inf_dist(q_singletons, qbar) == 0.0);

    const Vector q_grand = semicoop_target(game, CoalitionPartition::grand(4), ones);
    const Vector q_pareto = pareto_target(game, ones);
    CHECK(inf_dist(q_grand, q_pareto) == 0.0);

    // center/leaves partition cuts every edge, so the targets are standalone
    const Vector q_split =
        semicoop_target(game, CoalitionPartition::from_blocks({{0}, {1, 2, 3}}, 4), ones);
    CHECK(inf_dist(q_split, qbar) < 1e-15);
}

TEST_CASE("welfare FOC residual") {
    SUBCASE("no externalities at the standalone target") {
        const GameSpec game = make_unit_exponential_game(DependenceMatrix::zero(3));
        const Vector res =
            pareto_foc_residual(game, WelfareWeights::ones(3), standalone_target(game));
        CHECK(inf_norm(res) < 1e-14);
    }
    SUBCASE("under-provision at zero effort") {
        const GameSpec game = symmetric_pair(0.5);
        const Vector res = pareto_foc_residual(game, WelfareWeights::ones(2), {0, 0});
        const double expected = 1.0 + 0.5 - kInvE;
        CHECK(res[0] == doctest::Approx(expected).epsilon(1e-14));
        CHECK(res[0] > 0.0);
    }
    SUBCASE("coalition residual reduces to the standalone condition for singletons") {
        const GameSpec game = star_game(0.2);
        const Vector res = semicoop_foc_residual(game, CoalitionPartition::singletons(4),
                                                 WelfareWeights::ones(4),
                                                 standalone_target(game));
        // aggregates exceed standalone levels, so residuals are negative but
        // the correction term must be absent
        for (int i = 0; i < 4; ++i) {
            double agg = standalone_target(game)[i];
            for (int j = 0; j < 4; ++j)
                agg += game.g.weight(i, j) * standalone_target(game)[j];
            const double expected = std::exp(-agg) - kInvE;
            CHECK(res[i] == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(CoalitionPartition::from_blocks({{0, 1}}, 3), ValidationError);
    CHECK_THROWS_AS(CoalitionPartition::from_blocks({{0, 1}, {1, 2}}, 3), ValidationError);
    CHECK_THROWS_AS(CoalitionPartition::from_blocks({{0}, {}, {1, 2}}, 3), ValidationError);
    CHECK_THROWS_AS(CoalitionPartition::from_blocks({{0, 3}, {1, 2}}, 3), ValidationError);
    CHECK_NOTHROW(CoalitionPartition::from_blocks({{2, 0}, {1}}, 3));
}

TEST_CASE("game validation") {
    CHECK_THROWS_AS(
        make_game(DependenceMatrix::zero(2), {BenefitFunction::exponential(1.0)},
                  {1.0, 1.0}),
        ValidationError);
    CHECK_THROWS_AS(make_game(DependenceMatrix::zero(1), {BenefitFunction::exponential(1.0)},
                              {-1.0}),
                    ValidationError);
    CHECK_THROWS_AS(WelfareWeights::from_vector({1.0, 0.0}), ValidationError);
}
