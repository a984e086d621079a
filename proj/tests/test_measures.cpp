#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "stsign/measures.hpp"

using namespace stsign;

namespace {

// Quadrature oracle: midpoint rule for the Sato-Tate density over a union.
double st_measure_quadrature(const IntervalUnion& u, std::size_t panels) {
    double mass = 0.0;
    for (const auto& [a, b] : u.parts()) {
        const std::size_t n =
            std::max<std::size_t>(1, std::size_t(panels * (b - a) / kPi));
        const double h = (b - a) / double(n);
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double th = a + (i + 0.5) * h;
            const double sn = std::sin(th);
            s += sn * sn;
        }
        mass += s * h * 2.0 / kPi;
    }
    return mass;
}

// Counting oracle for the sine preimage measure on a fine midpoint grid.
double sin_box_count(double a, double b, std::size_t n) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (i + 0.5) / double(n);
        const double s = std::sin(2.0 * kPi * u);
        if (s >= a && s <= b) ++count;
    }
    return double(count) / double(n);
}

}  // namespace

TEST_CASE("st_cdf endpoints, midpoint, symmetry") {
    CHECK(st_cdf(0.0) == 0.0);
    CHECK(st_cdf(kPi) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(st_cdf(kPi / 2) == doctest::Approx(0.5).epsilon(1e-15));
    for (int i = 0; i <= 200; ++i) {
        const double th = kPi * i / 200.0;
        CHECK(std::abs(st_cdf(kPi - th) - (1.0 - st_cdf(th))) <= 1e-15);
    }
    CHECK_THROWS_AS(st_cdf(-0.1), std::domain_error);
    CHECK_THROWS_AS(st_cdf(kPi + 0.1), std::domain_error);
}

TEST_CASE("interval union validation and membership") {
    CHECK_THROWS_AS(IntervalUnion({{0.5, 0.4}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalUnion({{0.0, 1.0}, {0.9, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IntervalUnion({{-0.1, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalUnion({{0.0, kPi + 0.1}}), std::invalid_argument);
    IntervalUnion u({{0.1, 0.5}, {0.5, 1.0}});
    CHECK(u.contains(0.3));
    CHECK_FALSE(u.contains(0.5));  // open intervals
    CHECK_FALSE(u.contains(0.05));
    CHECK(u.total_length() == doctest::Approx(0.9));
}

TEST_CASE("st_measure of the full interval is 1") {
    CHECK(st_measure(IntervalUnion({{0.0, kPi}})) ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sign unions match the displayed endpoints") {
    IntervalUnion p1 = sign_interval_union(1, +1);
    REQUIRE(p1.parts().size() == 1);
    CHECK(p1.parts()[0].first == 0.0);
    CHECK(p1.parts()[0].second == doctest::Approx(kPi / 2).epsilon(1e-15));

    IntervalUnion m1 = sign_interval_union(1, -1);
    REQUIRE(m1.parts().size() == 1);
    CHECK(m1.parts()[0].first == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(m1.parts()[0].second == doctest::Approx(kPi).epsilon(1e-15));

    IntervalUnion p3 = sign_interval_union(3, +1);
    REQUIRE(p3.parts().size() == 2);
    CHECK(p3.parts()[0].first == 0.0);
    CHECK(p3.parts()[0].second == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(p3.parts()[1].first == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(p3.parts()[1].second ==
          doctest::Approx(3.0 * kPi / 4).epsilon(1e-15));

    CHECK_THROWS_AS(sign_interval_union(2, +1), std::invalid_argument);
    CHECK_THROWS_AS(sign_interval_union(1, 0), std::invalid_argument);
}

TEST_CASE("sign unions have Sato-Tate mass 1/2 for all odd nu <= 99") {
    for (unsigned nu = 1; nu <= 99; nu += 2) {
        const IntervalUnion pos = sign_interval_union(nu, +1);
        const IntervalUnion neg = sign_interval_union(nu, -1);
        const double mp = st_measure(pos);
        const double mn = st_measure(neg);
        REQUIRE(std::abs(mp - 0.5) <= 1e-12);
        REQUIRE(std::abs(mn - 0.5) <= 1e-12);
        REQUIRE(std::abs(mp + mn - 1.0) <= 1e-12);
        // All four product quadrants carry mass 1/4.
        REQUIRE(std::abs(product_measure(pos, pos) - 0.25) <= 1e-12);
        REQUIRE(std::abs(product_measure(pos, neg) - 0.25) <= 1e-12);
        REQUIRE(std::abs(product_measure(neg, pos) - 0.25) <= 1e-12);
        REQUIRE(std::abs(product_measure(neg, neg) - 0.25) <= 1e-12);
        // Diagonal mass (I x I) + (I' x I') = 1/2.
        REQUIRE(std::abs(product_measure(pos, pos) +
                         product_measure(neg, neg) - 0.5) <= 1e-12);
    }
}

TEST_CASE("closed form matches quadrature for sign unions") {
    for (unsigned nu : {1u, 3u, 5u, 9u, 19u, 49u, 99u}) {
        const IntervalUnion pos = sign_interval_union(nu, +1);
        CHECK(std::abs(st_measure(pos) - st_measure_quadrature(pos, 1'000'000)) <=
              1e-9);
    }
}

TEST_CASE("epsilon unions") {
    // eps = 0 degenerates to the sign unions.
    for (unsigned nu : {1u, 5u}) {
        const auto a = epsilon_interval_union(nu, 0.0, false).parts();
        const auto b = sign_interval_union(nu, +1).parts();
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].first == doctest::Approx(b[i].first).epsilon(1e-15));
            CHECK(a[i].second == doctest::Approx(b[i].second).epsilon(1e-15));
        }
    }
    // nu = 1, eps = 1/2: (pi/12, 5 pi/12) from arcsin(1/2) = pi/6.
    const auto e = epsilon_interval_union(1, 0.5, false).parts();
    REQUIRE(e.size() == 1);
    CHECK(e[0].first == doctest::Approx(kPi / 12).epsilon(1e-14));
    CHECK(e[0].second == doctest::Approx(5.0 * kPi / 12).epsilon(1e-14));
    // Shrinking: larger eps nests strictly inside smaller eps.
    for (unsigned nu : {1u, 7u}) {
        for (bool primed : {false, true}) {
            const auto big = epsilon_interval_union(nu, 0.1, primed).parts();
            const auto small = epsilon_interval_union(nu, 0.4, primed).parts();
            for (std::size_t i = 0; i < big.size(); ++i) {
                CHECK(small[i].first > big[i].first);
                CHECK(small[i].second < big[i].second);
            }
        }
    }
    CHECK_THROWS_AS(epsilon_interval_union(1, 1.0, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(epsilon_interval_union(1, -0.1, false),
                    std::invalid_argument);
    CHECK_THROWS_AS(epsilon_interval_union(4, 0.1, false),
                    std::invalid_argument);
}

TEST_CASE("sin_box_measure: pinned values and errors") {
    CHECK(sin_box_measure(-1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sin_box_measure(0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sin_box_measure(-1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sin_box_measure(0.3, 0.3) == 0.0);
    CHECK_THROWS_AS(sin_box_measure(0.5, 0.4), std::domain_error);
    CHECK_THROWS_AS(sin_box_measure(-1.5, 0.0), std::domain_error);
}

TEST_CASE("sin_box_measure: partition, arcsine form, counting oracle") {
    std::mt19937_64 rng(3);
    auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    for (int it = 0; it < 50; ++it) {
        double a = unit(), b = unit();
        if (a > b) std::swap(a, b);
        // Partition of [-1, 1] by {a, b}; the cut points carry measure zero.
        const double total = sin_box_measure(-1.0, a) + sin_box_measure(a, b) +
                             sin_box_measure(b, 1.0);
        CHECK(std::abs(total - 1.0) <= 1e-12);
        // Equality with the arcsine difference, all boxes.
        CHECK(std::abs(sin_box_measure(a, b) -
                       (std::asin(b) - std::asin(a)) / kPi) <= 1e-12);
        // Fine-grid counting oracle.
        CHECK(std::abs(sin_box_measure(a, b) - sin_box_count(a, b, 1'000'000)) <=
              1e-5);
    }
}
