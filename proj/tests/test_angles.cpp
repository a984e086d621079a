#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "stsign/angles.hpp"
#include "stsign/measures.hpp"

using namespace stsign;

TEST_CASE("angle endpoints and clamping") {
    CHECK(sato_tate_angle(2.0) == 0.0);
    CHECK(sato_tate_angle(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(sato_tate_angle(-2.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(sato_tate_angle(2.0 + 0.5e-12) == 0.0);
    CHECK(sato_tate_angle(-2.0 - 0.5e-12) == doctest::Approx(kPi));
    CHECK_THROWS_AS(sato_tate_angle(2.0 + 1e-11), std::domain_error);
    CHECK_THROWS_AS(sato_tate_angle(-2.1), std::domain_error);
}

TEST_CASE("angle is monotone decreasing and inverts 2cos") {
    double prev = sato_tate_angle(2.0);
    for (int i = 1; i <= 400; ++i) {
        const double lambda = 2.0 - 4.0 * i / 400.0;
        const double th = sato_tate_angle(lambda);
        CHECK(th > prev);
        prev = th;
    }
    for (int i = 0; i <= 1000; ++i) {
        const double theta = kPi * i / 1000.0;
        CHECK(std::abs(sato_tate_angle(2.0 * std::cos(theta)) - theta) <=
              1e-12);
    }
}

TEST_CASE("angle_sequence reproduces lambda through 2cos") {
    EigenvalueTable t = build_table(preset_ec11(), 1000);
    AngleSequence seq = angle_sequence(t);
    REQUIRE(seq.primes == t.primes);
    for (std::size_t i = 0; i < seq.theta.size(); ++i) {
        CHECK(seq.theta[i] >= 0.0);
        CHECK(seq.theta[i] <= kPi);
        CHECK(std::abs(2.0 * std::cos(seq.theta[i]) - t.lambda[i]) <= 1e-12);
    }
    CHECK(seq.theta_at(7) == sato_tate_angle(t.lambda_at(7)));
    CHECK_THROWS_AS(seq.theta_at(11), std::out_of_range);
}

TEST_CASE("relation_search: planted rational angle") {
    // theta1 = pi/3, so theta1/2pi = 1/6: the (6, 0, 1) relation.
    RelationReport r = relation_search(kPi / 3, 1.1, 10, 1e-9);
    CHECK(r.found);
    CHECK(r.m == 6);
    CHECK(r.n == 0);
    CHECK(r.c == 1);
    CHECK(r.residual <= 1e-15);
    CHECK(r.theta1_rational);
    CHECK(r.theta1_denominator == 3);  // theta1/pi = 1/3
}

TEST_CASE("relation_search: equal angles") {
    RelationReport r = relation_search(1.0, 1.0, 10, 1e-9);
    CHECK(r.found);
    CHECK(r.m == 1);
    CHECK(r.n == -1);
    CHECK(r.c == 0);
    CHECK(r.residual == 0.0);
}

TEST_CASE("relation_search is exhaustive on planted relations") {
    // Plant m t1 + n t2 = c and require recovery at equal-or-smaller residual.
    const double t1 = 0.1234567890123;
    struct Plant {
        long m, n, c;
    };
    for (const Plant pl : {Plant{3, 5, 1}, Plant{7, -4, 0}, Plant{1, 9, 1}}) {
        const double t2 = (double(pl.c) - pl.m * t1) / pl.n;
        const double th1 = t1 * 2.0 * kPi;
        const double th2 = t2 * 2.0 * kPi;
        REQUIRE(th2 > 0.0);
        REQUIRE(th2 < kPi);
        RelationReport r = relation_search(th1, th2, 10, 1e-9);
        CHECK(r.found);
        // The reported triple must itself be a relation of tiny residual.
        const double v = r.m * t1 + r.n * t2 - double(r.c);
        CHECK(std::abs(v) <= 1e-9);
    }
}

TEST_CASE("relation_search: no relation for the experiment pair at p=5") {
    EigenvalueTable d = build_table(preset_delta(), 10);
    EigenvalueTable e = build_table(preset_ec11(), 10);
    const double th1 = sato_tate_angle(d.lambda_at(5));
    const double th2 = sato_tate_angle(e.lambda_at(5));
    RelationReport r = relation_search(th1, th2, 100, 1e-9);
    CHECK_FALSE(r.found);
    CHECK(r.residual > 1e-9);
    CHECK_FALSE(r.theta1_rational);
    CHECK_FALSE(r.theta2_rational);
}

TEST_CASE("relation_search: domain and budget errors") {
    CHECK_THROWS_AS(relation_search(0.0, 1.0, 10, 1e-9), std::domain_error);
    CHECK_THROWS_AS(relation_search(1.0, kPi, 10, 1e-9), std::domain_error);
    CHECK_THROWS_AS(relation_search(1.0, 1.0, 20000, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(relation_search(1.0, 1.0, 0, 1e-9), std::invalid_argument);
}
