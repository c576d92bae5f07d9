#include <doctest.h>

#include <cmath>

#include "gfw/theory.hpp"

using namespace gfw;

TEST_CASE("plain-method bound, exact-oracle reduction") {
    BoundParams p;
    p.delta = 1.0;
    p.A = 8.0;  // 8*L*C^2 with L = C = 1
    for (int t : {1, 5, 50, 400}) CHECK(bound_fw1(t, p) == doctest::Approx(8.0 / (t + 2)));
}

TEST_CASE("plain-method bound, half-delta arithmetic") {
    BoundParams p;
    p.delta = 0.5;
    p.h0 = 1.0;
    p.A_seq = {2.0, 2.0};
    // (1-1/2)*9^(1/2)/3^1 * 1 + (ln2+1)/3^1 * 2 at t = 1
    double expected = 0.5 * 3.0 / 3.0 + (std::log(2.0) + 1.0) / 3.0 * 2.0;
    CHECK(bound_fw1(1, p) == doctest::Approx(expected));
    SUBCASE("gradient cap activates when provided") {
        p.B = 1e-9;
        p.s = 4;
        CHECK(bound_fw1(1, p) == doctest::Approx(2.0 * 1.0 * 2.0 * 1e-9));
    }
}

TEST_CASE("plain-method bound requires the A sequence") {
    BoundParams p;
    CHECK_THROWS_AS(bound_fw1(1, p), std::invalid_argument);
    p.A_seq = {1.0};
    CHECK_THROWS_AS(bound_fw1(3, p), std::invalid_argument);
    CHECK_THROWS_AS(bound_fw1(0, p), std::invalid_argument);
}

TEST_CASE("relaxed-update bound") {
    BoundParams p;
    CHECK(bound_fw2(2, p) == doctest::Approx(2.0));
    BoundParams half = p;
    half.delta = 0.5;
    for (int t : {1, 3, 10}) CHECK(bound_fw2(t, half) == doctest::Approx(4.0 * bound_fw2(t, p)));
}

TEST_CASE("accelerated boundary bound") {
    BoundParams p;
    p.mu = 1.0;
    p.h0 = 2.0;
    CHECK(bound_accfw_boundary(1, p) ==
          doctest::Approx(4.0 * std::exp(4.0) * 2.0 / 9.0));
    // (t+2)^2 scaling: t -> 2t+2 maps t+2 -> 2(t+2).
    CHECK(bound_accfw_boundary(4, p) == doctest::Approx(4.0 * bound_accfw_boundary(10, p)));
    BoundParams no_mu;
    CHECK_THROWS_AS(bound_accfw_boundary(1, no_mu), std::invalid_argument);
}

TEST_CASE("accelerated interior bound") {
    BoundParams p;
    p.mu = 1.0;
    p.h0 = 1.0;
    SUBCASE("Dstar = C collapses the linear term") {
        p.Dstar = 1.0;
        double first_only = 4.0 * std::exp(4.0) / 9.0;
        double z = 2.0 * 4.0 / 3.0;
        CHECK(bound_accfw_interior(1, p) == doctest::Approx(std::min(first_only, z)));
    }
    SUBCASE("fallback term value") {
        p.Dstar = 0.0;
        p.h0 = 1e9;  // force the min onto Z_t
        CHECK(bound_accfw_interior(3, p) == doctest::Approx(2.0));
    }
    SUBCASE("min dominates both arguments") {
        for (int t : {1, 2, 9}) {
            double v = bound_accfw_interior(t, p);
            CHECK(v <= 2.0 * (5.0 - p.Dstar * p.Dstar) / (t + 2.0) + 1e-12);
        }
    }
}

TEST_CASE("accelerated relaxed bound") {
    BoundParams p;
    p.mu = 1.0;
    p.h0 = 1.0;
    SUBCASE("delta=1 and Dstar=C leave the quadratic term") {
        p.Dstar = 1.0;
        CHECK(bound_accfw2(2, p) == doctest::Approx(4.0 * std::exp(4.0) / 25.0));
    }
    SUBCASE("halving delta quadruples the C^2/delta^2 part") {
        p.h0 = 0.0;
        p.Dstar = 0.0;
        BoundParams q = p;
        q.delta = 0.5;
        CHECK(bound_accfw2(3, q) == doctest::Approx(4.0 * bound_accfw2(3, p)));
    }
}

TEST_CASE("practical envelope") {
    BoundParams p;
    p.B = 2.0;
    p.s = 9;
    SUBCASE("exact oracle kills the constant branch") {
        p.delta = 1.0;
        CHECK(bound_practical(1, p, false) == 0.0);
    }
    SUBCASE("nu = 1 halves when t doubles") {
        CHECK(bound_practical(10, p, true) == doctest::Approx(2.0 * bound_practical(20, p, true)));
        CHECK(bound_practical(1, p, true) == doctest::Approx(2.0 * 2.0 * 3.0));
    }
    SUBCASE("B is mandatory") {
        p.B = 0.0;
        CHECK_THROWS_AS(bound_practical(1, p, true), std::invalid_argument);
    }
}

TEST_CASE("recurrence unroll") {
    SUBCASE("single step") {
        CHECK(recurrence_H(0, 0.4, 1.0, {2.0}) == doctest::Approx(0.6 + 0.5));
    }
    SUBCASE("matches a direct simulation") {
        double delta = 0.7, h0 = 3.0, A = 1.5;
        std::vector<double> seq(101, A);
        double h = h0;
        for (int k = 0; k <= 100; ++k)
            h = (1.0 - 2.0 * delta / (k + 2.0)) * h + A / ((k + 2.0) * (k + 2.0));
        CHECK(recurrence_H(100, delta, h0, seq) == doctest::Approx(h).epsilon(1e-14));
    }
    SUBCASE("sequence length is enforced") {
        CHECK_THROWS_AS(recurrence_H(3, 0.5, 1.0, {1.0, 1.0}), std::invalid_argument);
    }
}

TEST_CASE("recurrence stays below the composite curve") {
    for (auto [h0, A] : std::vector<std::pair<double, double>>{{1, 1}, {1, 8}, {5, 0.5}}) {
        for (int di = 1; di <= 10; ++di) {
            double delta = 0.1 * di;
            std::vector<double> seq(301, A);
            for (int t = 1; t <= 300; ++t)
                CHECK(recurrence_H(t, delta, h0, seq) <=
                      composite_bound(t, delta, h0, A) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("estimation error bound") {
    BoundParams p;
    p.mu = 2.0;
    p.s = 4;
    CHECK(estimation_error_bound(0.0, p, 0.0) == 0.0);
    CHECK(estimation_error_bound(1.0, p, 0.0) == doctest::Approx(1.0));  // sqrt(2/2)
    CHECK(estimation_error_bound(-1e-9, p, 0.0) == 0.0);  // tiny negative h clamps
    CHECK(estimation_error_bound(0.0, p, 0.5) == doctest::Approx(std::sqrt(2.0 * 2.0 * 0.5 / 2.0)));
    CHECK_THROWS_AS(estimation_error_bound(1.0, p, -1.0), std::invalid_argument);
}

TEST_CASE("adaptive A sequence from a trace") {
    IterateTrace trace;
    for (int t = 0; t < 5; ++t) {
        TraceRow row;
        row.t = t;
        row.xg = (t == 2) ? -3.0 : 0.5;
        trace.rows.push_back(row);
    }
    auto seq = a_t_from_trace(trace, 0.5, 1.0, 1.0);
    REQUIRE(seq.size() == 5);
    // Running max is nondecreasing and includes the 8*L*C^2 floor.
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i] >= seq[i - 1]);
    CHECK(seq[0] == doctest::Approx(4.0 * 0.5 * 2.0 * 0.5 + 8.0));
    CHECK(seq[4] == doctest::Approx(4.0 * 0.5 * 4.0 * 3.0 + 8.0));
}

TEST_CASE("bounds decay on a time grid") {
    BoundParams p;
    p.delta = 0.8;
    p.h0 = 1.0;
    p.A = 8.0;
    p.mu = 1.0;
    double prev1 = 1e300, prev2 = 1e300, prev3 = 1e300;
    for (int t = 1; t <= 200; ++t) {
        double b1 = bound_fw1(t, p), b2 = bound_fw2(t, p), b3 = bound_accfw_boundary(t, p);
        CHECK(b1 > 0.0);
        CHECK(b1 <= prev1 + 1e-15);
        CHECK(b2 <= prev2);
        CHECK(b3 <= prev3);
        prev1 = b1;
        prev2 = b2;
        prev3 = b3;
    }
}

TEST_CASE("parameter validation") {
    BoundParams p;
    p.delta = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = BoundParams{};
    p.nu = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = BoundParams{};
    p.mu = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
