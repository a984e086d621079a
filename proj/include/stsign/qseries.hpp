// Truncated integer power series with exact 128-bit coefficients.
//
// Arithmetic never wraps silently: every product either certifies ahead of
// time (from coefficient magnitude bounds) that no intermediate can exceed
// 128 bits, or falls back to per-operation checked arithmetic and throws
// std::overflow_error.

#pragma once

#include <cstddef>
#include <vector>

#include "stsign/int128.hpp"

namespace stsign {

// Coefficient of q^n lives at index n, for 0 <= n <= bound().
class QSeries {
  public:
    explicit QSeries(std::size_t bound)
        : coeffs_(bound + 1, 0) {}
    QSeries(std::size_t bound, std::vector<int128> coeffs);

    static QSeries one(std::size_t bound);

    std::size_t bound() const { return coeffs_.size() - 1; }
    int128 coeff(std::size_t n) const { return coeffs_.at(n); }
    void set_coeff(std::size_t n, int128 v) { coeffs_.at(n) = v; }
    const std::vector<int128>& coeffs() const { return coeffs_; }

    bool operator==(const QSeries& other) const = default;

  private:
    std::vector<int128> coeffs_;
};

// Cauchy product truncated at the common bound. Requires equal bounds.
QSeries multiply(const QSeries& a, const QSeries& b);

// base^exp on the truncated ring, binary exponentiation. exp >= 0.
QSeries pow_truncated(const QSeries& base, unsigned exp);

// prod_{n=1..bound} (1 - q^n), truncated at bound.
QSeries euler_product(std::size_t bound);

// Coefficients of Delta = q * prod_{n>=1} (1 - q^n)^24: coeff(n) = tau(n)
// for 1 <= n <= bound, coeff(0) = 0. bound >= 1.
QSeries eta_power_24_delta(std::size_t bound);

}  // namespace stsign
