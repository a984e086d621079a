// Integer and prime utilities: Eratosthenes sieve, factorization by trial
// division, divisor enumeration, Moebius function, Kronecker symbol.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace stsign {

// Plain bit-table sieve of Eratosthenes. Immutable once built; safe for
// concurrent readers.
class PrimeSieve {
  public:
    // limit must be >= 2 and <= kMaxLimit (desk scale, no segmentation).
    explicit PrimeSieve(std::uint64_t limit);

    static constexpr std::uint64_t kMaxLimit = 200'000'000;

    std::uint64_t limit() const { return limit_; }
    bool is_prime(std::uint64_t n) const;
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    // pi(x): number of primes <= x, for x <= limit.
    std::uint64_t count_leq(std::uint64_t x) const;

  private:
    std::uint64_t limit_;
    std::vector<bool> table_;
    std::vector<std::uint64_t> primes_;
};

// Trial-division factorization, (prime, exponent) pairs with ascending primes.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// mu(n): 0 if n has a square divisor, else (-1)^(number of prime factors).
int mobius(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

// Kronecker symbol (a|n) on the full domain, standard conventions:
//   (a|0) = 1 if a = +-1, else 0
//   (a|-1) = -1 for a < 0, else +1
//   (a|2) = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
// Completely multiplicative in n for fixed a.
int kronecker(long long a, long long n);

// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace stsign
