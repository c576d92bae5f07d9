#include <doctest.h>

#include <cmath>

#include "gfw/adversarial.hpp"
#include "gfw/oracles.hpp"

using namespace gfw;

TEST_CASE("grid instance layout") {
    AdversarialInstance inst = build_grid_instance(0.25);
    CHECK(inst.graph.d == 16);
    CHECK(inst.model.s == 4);
    CHECK(inst.model.g == 1);
    CHECK(inst.model.C == 1.0);
    for (int i = 0; i < 4; ++i) CHECK(inst.objective.b()[i] == 1.0);
    for (int i = 4; i < 16; ++i) CHECK(inst.objective.b()[i] == 0.25);
    CHECK(is_member(inst.optimal_support, inst.model));

    Eigen::VectorXd grad = inst.objective.gradient(inst.x_star);
    for (int i = 0; i < 4; ++i) CHECK(grad[i] == doctest::Approx(-0.5));
    for (int i = 4; i < 16; ++i) CHECK(grad[i] == doctest::Approx(-0.25));

    CHECK_THROWS_AS(build_grid_instance(0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid_instance(0.5), std::invalid_argument);
    CHECK_THROWS_AS(build_grid_instance(0.25, 1, 1), std::invalid_argument);
}

TEST_CASE("planted optimum is exact") {
    AdversarialInstance inst = build_grid_instance(0.3);
    Eigen::VectorXd z = -inst.objective.gradient(inst.x_star);
    auto best = brute_force_best_support(z, inst.model);
    CHECK(best.support == inst.optimal_support);
    // Exact duality gap vanishes at x*.
    Eigen::VectorXd grad = inst.objective.gradient(inst.x_star);
    double gap = grad.dot(inst.x_star) + inst.model.C * best.value;
    CHECK(std::abs(gap) < 1e-14);
}

TEST_CASE("gap violations match closed forms across tau") {
    for (int i = 1; i <= 10; ++i) {
        double tau = 0.5 * i / 11.0;
        AdversarialInstance inst = build_grid_instance(tau);
        double root = std::sqrt(0.75 + tau * tau);
        Eigen::VectorXd vbar = one_wrong_vertex(inst);
        CHECK(std::abs(vbar.norm() - 1.0) < 1e-12);

        double add = gap_additive_violation(inst, vbar);
        CHECK(add > 0.0);
        CHECK(std::abs(add - (1.0 - root)) < 1e-12);

        double mult = gap_multiplicative_violation(inst);
        CHECK(mult < 0.0);
        CHECK(std::abs(mult - (root - 1.0)) < 1e-12);

        double ratio = one_wrong_dmo_ratio(inst);
        CHECK(std::abs(ratio - root) < 1e-12);
        CHECK(ratio >= 0.75 + tau * tau);  // still a valid approximate oracle
    }
}

TEST_CASE("exact vertex yields no violation") {
    AdversarialInstance inst = build_grid_instance(0.2);
    Eigen::VectorXd z = -inst.objective.gradient(inst.x_star);
    Eigen::VectorXd v_star = support_to_vertex(z, inst.optimal_support, inst.model.C);
    CHECK(std::abs(gap_additive_violation(inst, v_star)) < 1e-14);
}

TEST_CASE("path probe instance") {
    double tau = 0.5;
    PathProbeInstance ap = build_path_probe_instance(tau);
    const PathProbeReport& rep = ap.report;
    double scale = std::sqrt(3.0 + tau * tau);

    CHECK(ap.base.graph.d == 30);
    CHECK(std::abs(ap.x_probe.norm() - 1.0) < 1e-12);
    CHECK(std::abs(rep.optimal_value + 2.0) < 1e-12);
    CHECK(std::abs(rep.best_wrong_value + scale) < 1e-12);
    CHECK(std::abs(rep.probe_xg + (3.0 + tau) / scale) < 1e-12);
    // The probe value sits strictly between the best wrong and optimal values.
    CHECK(rep.probe_xg < rep.best_wrong_value);
    CHECK(rep.probe_xg > rep.optimal_value);
    CHECK(rep.additive_violation > 0.0);
    CHECK(std::abs(rep.additive_violation - (2.0 - scale)) < 1e-12);
    CHECK(rep.certified_gap < 0.0);
    CHECK(std::abs(rep.wrong_ratio - scale / 2.0) < 1e-12);
    CHECK(rep.heuristic_ratio == doctest::Approx(1.0));

    // Gradient at the probe point is the advertised pattern.
    Eigen::VectorXd grad = ap.base.objective.gradient(ap.x_probe);
    for (int i = 0; i < 4; ++i) CHECK(grad[i] == doctest::Approx(1.0));
    for (int i = 4; i < 30; ++i) CHECK(grad[i] == doctest::Approx(tau));
}

TEST_CASE("probe limits as tau vanishes") {
    PathProbeInstance ap = build_path_probe_instance(1e-8);
    CHECK(ap.report.best_wrong_value == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-9));
    CHECK(ap.report.wrong_ratio == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));
    CHECK_THROWS_AS(build_path_probe_instance(0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_path_probe_instance(1.0), std::invalid_argument);
}
