#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "stsign/arith.hpp"

using namespace stsign;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Independent oracle: sieve of Sundaram (odd composites from i+j+2ij).
std::uint64_t sundaram_prime_count(std::uint64_t limit) {
    if (limit < 2) return 0;
    const std::uint64_t m = (limit - 1) / 2;
    std::vector<bool> marked(m + 1, false);
    for (std::uint64_t i = 1; i <= m; ++i)
        for (std::uint64_t j = i; i + j + 2 * i * j <= m; ++j)
            marked[i + j + 2 * i * j] = true;
    std::uint64_t count = 1;  // the prime 2
    for (std::uint64_t i = 1; i <= m; ++i)
        if (!marked[i]) ++count;
    return count;
}

}  // namespace

TEST_CASE("sieve: first primes") {
    PrimeSieve s(10);
    CHECK(s.primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(s.limit() == 10);
}

TEST_CASE("sieve: pi(100) = 25 against trial division") {
    PrimeSieve s(100);
    std::uint64_t oracle = 0;
    for (std::uint64_t n = 0; n <= 100; ++n)
        if (trial_division_prime(n)) ++oracle;
    CHECK(oracle == 25);
    CHECK(s.count_leq(100) == 25);
    CHECK(s.primes().size() == 25);
}

TEST_CASE("sieve agrees with trial division up to 10^4") {
    PrimeSieve s(10'000);
    for (std::uint64_t n = 0; n <= 10'000; ++n)
        REQUIRE(s.is_prime(n) == trial_division_prime(n));
}

TEST_CASE("sieve: pi(10^6) = 78498 against Sundaram oracle") {
    PrimeSieve s(1'000'000);
    CHECK(s.count_leq(1'000'000) == 78498);
    CHECK(sundaram_prime_count(1'000'000) == 78498);
}

TEST_CASE("sieve: rejects bad limits") {
    CHECK_THROWS_AS(PrimeSieve(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeSieve(0), std::invalid_argument);
}

TEST_CASE("mobius basics") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);  // three distinct prime factors
    CHECK(mobius(2) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("mobius is multiplicative on coprime arguments") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 2000; ++it) {
        const std::uint64_t a = rng() % 2000 + 1;
        const std::uint64_t b = rng() % 2000 + 1;
        if (std::gcd(a, b) != 1) continue;
        CHECK(mobius(a * b) == mobius(a) * mobius(b));
    }
}

TEST_CASE("sum of mobius over divisors is the unit indicator") {
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        int sum = 0;
        for (std::uint64_t d : divisors(n)) sum += mobius(d);
        REQUIRE(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("kronecker: pinned values") {
    CHECK(kronecker(1, 7) == 1);
    CHECK(kronecker(2, 15) == 1);   // (2|3)(2|5) = (-1)(-1)
    CHECK(kronecker(-4, 5) == 1);   // (-1|5)(4|5) = 1*1
    CHECK(kronecker(-1, 3) == -1);
    // n = 0 and negative n conventions
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(5, 0) == 0);
    CHECK(kronecker(3, -1) == 1);
    CHECK(kronecker(-3, -1) == -1);
    CHECK(kronecker(0, 3) == 0);
    CHECK(kronecker(0, 1) == 1);
    // (a|2) rule
    CHECK(kronecker(7, 2) == 1);
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(6, 2) == 0);
}

TEST_CASE("kronecker is completely multiplicative in nonzero n") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 4000; ++it) {
        const long long a = static_cast<long long>(rng() % 201) - 100;
        const long long m = static_cast<long long>(rng() % 60) - 30;
        const long long n = static_cast<long long>(rng() % 60) - 30;
        if (m == 0 || n == 0) continue;  // (a|0) breaks multiplicativity
        REQUIRE(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
    }
}

TEST_CASE("kronecker matches Euler's criterion at odd primes") {
    PrimeSieve s(1000);
    for (std::uint64_t p : s.primes()) {
        if (p == 2) continue;
        for (long long a = -50; a <= 50; ++a) {
            // a^((p-1)/2) mod p in {0, 1, p-1}
            std::uint64_t base = ((a % (long long)p) + (long long)p) % (long long)p;
            std::uint64_t r = 1, e = (p - 1) / 2, b = base;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            const int euler = (r == 0) ? 0 : (r == 1 ? 1 : -1);
            REQUIRE(kronecker(a, (long long)p) == euler);
        }
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(7) == std::vector<std::uint64_t>{1, 7});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(36) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("factorize") {
    using F = std::vector<std::pair<std::uint64_t, int>>;
    CHECK(factorize(1) == F{});
    CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(97) == F{{97, 1}});
}
