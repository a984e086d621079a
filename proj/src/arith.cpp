#include "stsign/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsign {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("PrimeSieve: limit must be >= 2");
    if (limit > kMaxLimit)
        throw std::invalid_argument("PrimeSieve: limit exceeds desk-scale cap");
    table_.assign(limit + 1, true);
    table_[0] = table_[1] = false;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!table_[p]) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) table_[m] = false;
    }
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (table_[n]) primes_.push_back(n);
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    if (n > limit_) throw std::out_of_range("PrimeSieve: query beyond limit");
    return table_[n];
}

std::uint64_t PrimeSieve::count_leq(std::uint64_t x) const {
    if (x > limit_) throw std::out_of_range("PrimeSieve: query beyond limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be positive");
    int k = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        k = -k;
    }
    return k;
}

bool is_squarefree(std::uint64_t n) { return mobius(n) != 0; }

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int k = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // Split off the even part of n; each factor 2 contributes (a|2).
    int twos = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++twos;
    }
    if (twos & 1) {
        long long am8 = ((a % 8) + 8) % 8;
        if (am8 == 3 || am8 == 5) k = -k;
    }
    // Jacobi symbol on odd n > 0 via quadratic reciprocity.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) k = -k;
        }
        std::swap(a, n);
        if ((a % 4 == 3) && (n % 4 == 3)) k = -k;
        a %= n;
    }
    return (n == 1) ? k : 0;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stsign
