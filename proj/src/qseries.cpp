#include "stsign/qseries.hpp"

#include <cstdint>
#include <stdexcept>

namespace stsign {

namespace {

uint128 mag(int128 x) { return x < 0 ? uint128(0) - uint128(x) : uint128(x); }

uint128 max_abs(const std::vector<int128>& v) {
    uint128 m = 0;
    for (int128 x : v)
        if (mag(x) > m) m = mag(x);
    return m;
}

// True when every Cauchy sum of an (a, b) product is provably below 2^127:
// (terms per sum) * max|a| * max|b| <= INT128_MAX, evaluated without overflow.
bool product_certified(std::size_t terms, uint128 max_a, uint128 max_b) {
    if (max_a == 0 || max_b == 0) return true;
    const uint128 cap = uint128(INT128_MAX_VALUE);
    uint128 per_term = cap / uint128(terms);
    return max_a <= per_term / max_b;
}

const uint128 kInt64Cap = uint128(INT64_MAX);

std::vector<std::uint32_t> nonzero_indices(const std::vector<int128>& v,
                                           std::size_t cap) {
    std::vector<std::uint32_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (idx.size() == cap) return {};  // too dense, signal with empty
        idx.push_back(static_cast<std::uint32_t>(i));
    }
    return idx;
}

// c[n] = sum over sparse indices i <= n of a[i] * b[n-i]; gather form, so
// output coefficients are independent.
template <class Term>
std::vector<int128> sparse_gather(const std::vector<int128>& av,
                                  const std::vector<int128>& bv,
                                  const std::vector<std::uint32_t>& nz,
                                  Term term) {
    const std::size_t B = av.size() - 1;
    std::vector<int128> cv(B + 1);
#pragma omp parallel for schedule(dynamic, 1024)
    for (std::size_t n = 0; n <= B; ++n) {
        int128 acc = 0;
        for (std::uint32_t i : nz) {
            if (i > n) break;
            acc += term(av[i], bv[n - i]);
        }
        cv[n] = acc;
    }
    return cv;
}

template <class Term>
std::vector<int128> dense_square(const std::vector<int128>& av, Term term) {
    const std::size_t B = av.size() - 1;
    std::vector<int128> cv(B + 1);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::size_t n = 0; n <= B; ++n) {
        int128 acc = 0;
        for (std::size_t i = 0; 2 * i < n; ++i) acc += term(av[i], av[n - i]);
        acc *= 2;
        if (n % 2 == 0) acc += term(av[n / 2], av[n / 2]);
        cv[n] = acc;
    }
    return cv;
}

template <class Term>
std::vector<int128> dense_multiply(const std::vector<int128>& av,
                                   const std::vector<int128>& bv, Term term) {
    const std::size_t B = av.size() - 1;
    std::vector<int128> cv(B + 1);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::size_t n = 0; n <= B; ++n) {
        int128 acc = 0;
        for (std::size_t i = 0; i <= n; ++i) acc += term(av[i], bv[n - i]);
        cv[n] = acc;
    }
    return cv;
}

int128 term_small(int128 a, int128 b) {
    return int128(std::int64_t(a)) * std::int64_t(b);
}
int128 term_wide(int128 a, int128 b) { return a * b; }

}  // namespace

QSeries::QSeries(std::size_t bound, std::vector<int128> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != bound + 1)
        throw std::invalid_argument("QSeries: coefficient count != bound + 1");
}

QSeries QSeries::one(std::size_t bound) {
    QSeries s(bound);
    s.set_coeff(0, 1);
    return s;
}

QSeries multiply(const QSeries& a, const QSeries& b) {
    if (a.bound() != b.bound())
        throw std::invalid_argument("multiply: bounds differ");
    const std::size_t B = a.bound();
    const auto& av = a.coeffs();
    const auto& bv = b.coeffs();

    const uint128 ma = max_abs(av);
    const uint128 mb = max_abs(bv);
    if (!product_certified(B + 2, ma, mb)) {
        // Magnitudes too large to certify: per-operation checked arithmetic.
        std::vector<int128> cv(B + 1, 0);
        for (std::size_t n = 0; n <= B; ++n) {
            int128 acc = 0;
            for (std::size_t i = 0; i <= n; ++i)
                acc = checked_add(acc, checked_mul(av[i], bv[n - i]));
            cv[n] = acc;
        }
        return QSeries(B, std::move(cv));
    }

    const bool small = ma <= kInt64Cap && mb <= kInt64Cap;
    // A sparse factor turns the quadratic product into nnz * bound work.
    const std::size_t sparse_cap = B / 16 + 64;
    std::vector<std::uint32_t> nza = nonzero_indices(av, sparse_cap);
    std::vector<std::uint32_t> nzb =
        (&a == &b) ? nza : nonzero_indices(bv, sparse_cap);
    std::vector<int128> cv;
    if (!nza.empty() && (nzb.empty() || nza.size() <= nzb.size()))
        cv = small ? sparse_gather(av, bv, nza, term_small)
                   : sparse_gather(av, bv, nza, term_wide);
    else if (!nzb.empty())
        cv = small ? sparse_gather(bv, av, nzb, term_small)
                   : sparse_gather(bv, av, nzb, term_wide);
    else if (&a == &b)
        cv = small ? dense_square(av, term_small) : dense_square(av, term_wide);
    else
        cv = small ? dense_multiply(av, bv, term_small)
                   : dense_multiply(av, bv, term_wide);
    return QSeries(B, std::move(cv));
}

QSeries pow_truncated(const QSeries& base, unsigned exp) {
    if (exp == 0) return QSeries::one(base.bound());
    // Most-significant-bit first square-and-multiply.
    unsigned top = 1u << (31 - __builtin_clz(exp));
    QSeries acc = base;
    for (unsigned bit = top >> 1; bit != 0; bit >>= 1) {
        acc = multiply(acc, acc);
        if (exp & bit) acc = multiply(acc, base);
    }
    return acc;
}

QSeries euler_product(std::size_t bound) {
    // Pentagonal number expansion: prod (1 - q^n) has coefficient (-1)^k at
    // the generalized pentagonal exponents k(3k -+ 1)/2 and 0 elsewhere.
    // Sequential multiplication by the (1 - q^n) factors is not an option at
    // desk bounds: the truncated partial products grow like 2^(0.56 sqrt(B))
    // and burst 128 bits near B ~ 5*10^4.
    std::vector<int128> c(bound + 1, 0);
    c[0] = 1;
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t g1 = k * (3 * k - 1) / 2;
        const std::uint64_t g2 = k * (3 * k + 1) / 2;
        if (g1 > bound) break;
        const int s = (k % 2 == 0) ? 1 : -1;
        c[g1] += s;
        if (g2 <= bound) c[g2] += s;
    }
    return QSeries(bound, std::move(c));
}

QSeries eta_power_24_delta(std::size_t bound) {
    if (bound < 1)
        throw std::invalid_argument("eta_power_24_delta: bound must be >= 1");
    const std::size_t B = bound - 1;
    QSeries p24 = pow_truncated(euler_product(B), 24);
    QSeries delta(bound);
    for (std::size_t n = 1; n <= bound; ++n) delta.set_coeff(n, p24.coeff(n - 1));
    return delta;
}

}  // namespace stsign
