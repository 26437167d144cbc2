#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bellgate/lhv.hpp"

using namespace bellgate;
using std::numbers::pi;

namespace {

PhaseSettings chsh_phases(int d) {
    PhaseSettings ph;
    ph.alice.assign(2, std::vector<double>(d, 0.0));
    ph.bob.assign(2, std::vector<double>(d, 0.0));
    for (int m = 0; m < d; ++m) {
        ph.alice[1][m] = pi * m / d;
        ph.bob[0][m] = -pi * m / (2.0 * d);
        ph.bob[1][m] = pi * m / (2.0 * d);
    }
    return ph;
}

// d=2 3x3 Wigner-type settings: the same three measurements on both sides
PhaseSettings wigner_3x3() {
    return PhaseSettings{{{0, 0}, {0, pi / 3}, {0, -pi / 3}},
                         {{0, 0}, {0, pi / 3}, {0, -pi / 3}}};
}

}  // namespace

TEST_CASE("strategy points are LHV with the strategy itself as witness") {
    const Scenario s{3, 2, 2};
    const auto strat = strategy_from_index(s, 137);
    const auto t = strategy_point(s, strat);
    const auto model = lhv_feasible(t);
    REQUIRE(model.has_value());
    double w137 = 0.0;
    for (const auto& [k, w] : model->weights)
        if (k == 137) w137 = w;
    CHECK(w137 == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("CHSH d=2 feasibility flips across the threshold") {
    const Scenario s{2, 2, 2};
    const auto ideal = ideal_correlations(s, chsh_phases(2));
    CHECK(lhv_feasible(apply_detection(ideal, {0.82, 1.0})).has_value());
    CHECK_FALSE(lhv_feasible(apply_detection(ideal, {0.84, 1.0})).has_value());
}

TEST_CASE("witness reconstructs the target table") {
    const Scenario s{2, 2, 2};
    const auto t = apply_detection(ideal_correlations(s, chsh_phases(2)), {0.8, 0.9});
    const auto model = lhv_feasible(t);
    REQUIRE(model.has_value());
    CHECK(model->weight_sum() == doctest::Approx(1.0).epsilon(1e-9));
    const auto back = model->reconstruct(s);
    for (std::size_t k = 0; k < t.p.size(); ++k)
        CHECK(std::abs(back.p[k] - t.p[k]) < 1e-8);
}

TEST_CASE("dropping the no-result-pair rows changes nothing for valid tables") {
    const Scenario s{2, 2, 2};
    const auto t = apply_detection(ideal_correlations(s, chsh_phases(2)), {0.7, 0.8});
    LhvOptions drop;
    drop.drop_no_result_pair_rows = true;
    CHECK(lhv_feasible(t).has_value() == lhv_feasible(t, drop).has_value());
}

TEST_CASE("fixed-lambda thresholds: CHSH") {
    const Scenario s{2, 2, 2};
    const auto rep = eta_threshold_fixed_lambda(s, chsh_phases(2), 1.0, 1e-6);
    CHECK_FALSE(rep.no_violation);
    CHECK(rep.eta_star == doctest::Approx(2.0 / (std::sqrt(2.0) + 1.0)).epsilon(1e-3));
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->weight_sum() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("fixed-lambda thresholds: d=2 3x3 Wigner settings") {
    const Scenario s{2, 3, 3};
    SUBCASE("lambda = 1 gives sqrt(2/3)") {
        const auto rep = eta_threshold_fixed_lambda(s, wigner_3x3(), 1.0, 1e-6);
        CHECK(rep.eta_star == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-3));
    }
    SUBCASE("lambda = 0.94 gives 16/19") {
        const auto rep = eta_threshold_fixed_lambda(s, wigner_3x3(), 0.94, 1e-6);
        CHECK(std::abs(rep.eta_star - 16.0 / 19.0) < 2e-3);
    }
}

TEST_CASE("forall-lambda LP: CHSH dimensions 2 and 3") {
    const auto r2 = eta_threshold_forall_lambda({2, 2, 2}, chsh_phases(2));
    CHECK(r2.eta_star == doctest::Approx(0.8284).epsilon(1e-3));
    CHECK(*r2.alpha == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
    const auto r3 = eta_threshold_forall_lambda({3, 2, 2}, chsh_phases(3));
    CHECK(r3.eta_star == doctest::Approx(0.8209).epsilon(1e-3));
}

TEST_CASE("forall-lambda equals the small-lambda limit of the dichotomic search") {
    const Scenario s{2, 3, 3};
    const auto fa = eta_threshold_forall_lambda(s, wigner_3x3());
    CHECK(fa.eta_star == doctest::Approx(16.0 / 19.0).epsilon(1e-4));
    const auto fixed = eta_threshold_fixed_lambda(s, wigner_3x3(), 0.5, 1e-6);
    CHECK(std::abs(fixed.eta_star - fa.eta_star) < 1e-4);
}

TEST_CASE("alpha to eta inversion identities") {
    auto eta_of = [](double a) { return 2.0 * a / (1.0 + a); };
    CHECK(eta_of(1.0) == doctest::Approx(1.0));
    CHECK(eta_of(1.0 / 3.0) == doctest::Approx(0.5));
}

TEST_CASE("monotonicity of feasibility over the (eta, lambda) grid") {
    const Scenario s{2, 2, 2};
    const auto ideal = ideal_correlations(s, chsh_phases(2));
    const double etas[] = {0.70, 0.80, 0.85, 0.95};
    const double lambdas[] = {0.25, 0.5, 0.75, 1.0};
    bool feas[4][4];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            feas[a][b] = lhv_feasible(apply_detection(ideal, {etas[a], lambdas[b]})).has_value();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (feas[a][b]) {
                for (int a2 = 0; a2 <= a; ++a2) CHECK(feas[a2][b]);
                for (int b2 = 0; b2 <= b; ++b2) CHECK(feas[a][b2]);
            }
}

TEST_CASE("2x2 threshold is lambda independent") {
    for (int d : {2, 3}) {
        const Scenario s{d, 2, 2};
        const auto r1 = eta_threshold_fixed_lambda(s, chsh_phases(d), 1.0, 1e-6);
        const auto r05 = eta_threshold_fixed_lambda(s, chsh_phases(d), 0.5, 1e-6);
        CHECK(std::abs(r1.eta_star - r05.eta_star) < 1e-4);
    }
}

TEST_CASE("no violation flagged for product phases") {
    const Scenario s{2, 2, 2};
    PhaseSettings flat{{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}};
    const auto rep = eta_threshold_fixed_lambda(s, flat, 1.0, 1e-4);
    CHECK(rep.no_violation);
    CHECK(rep.eta_star == 1.0);
}

TEST_CASE("exact-rational feasibility agrees with the float path near threshold") {
    const Scenario s{2, 2, 2};
    const auto ideal = ideal_correlations(s, chsh_phases(2));
    const auto low = rationalize_table(apply_detection(ideal, {0.82, 1.0}));
    const auto high = rationalize_table(apply_detection(ideal, {0.84, 1.0}));
    CHECK(lhv_feasible_exact(low));
    CHECK_FALSE(lhv_feasible_exact(high));
    CHECK_THROWS_AS(lhv_feasible_exact(RationalTable{{4, 3, 3}, {}}), CapExceeded);
}

TEST_CASE("noise threshold by LP: Wigner settings give 0.2") {
    const Scenario s{2, 3, 3};
    const double p = noise_threshold_lp(s, wigner_3x3(), 1e-5);
    CHECK(p == doctest::Approx(0.2).epsilon(1e-3));
}
