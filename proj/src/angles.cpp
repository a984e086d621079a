#include "stsign/angles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stsign {

double sato_tate_angle(double lambda_p) {
    if (std::abs(lambda_p) > 2.0 + 1e-12)
        throw std::domain_error("sato_tate_angle: |lambda| > 2, Deligne bound "
                                "violated upstream");
    const double x = std::clamp(lambda_p / 2.0, -1.0, 1.0);
    return std::acos(x);
}

double AngleSequence::theta_at(std::uint64_t p) const {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p)
        throw std::out_of_range("prime not in angle sequence");
    return theta[static_cast<std::size_t>(it - primes.begin())];
}

AngleSequence angle_sequence(const EigenvalueTable& table) {
    AngleSequence seq;
    seq.label = table.spec.label;
    seq.primes = table.primes;
    seq.theta.resize(table.lambda.size());
    for (std::size_t i = 0; i < table.lambda.size(); ++i)
        seq.theta[i] = sato_tate_angle(table.lambda[i]);
    return seq;
}

namespace {

// min_{b <= height} dist(b * x, Z), with the minimizing b.
void rational_screen(double x, long height, double tol, bool* found,
                     long* denominator, double* residual) {
    double best = 2.0;
    long best_b = 0;
    for (long b = 1; b <= height; ++b) {
        const double v = b * x;
        const double r = std::abs(v - std::round(v));
        if (r < best) {
            best = r;
            best_b = b;
        }
    }
    *found = best < tol;
    *denominator = best_b;
    *residual = best;
}

}  // namespace

RelationReport relation_search(double theta1, double theta2, long height,
                               double tol) {
    constexpr double kPi = 3.141592653589793238462643383279502884;
    if (!(theta1 > 0.0 && theta1 < kPi && theta2 > 0.0 && theta2 < kPi))
        throw std::domain_error("relation_search: angles must lie in (0, pi)");
    if (height < 1 || height > 10'000)
        throw std::invalid_argument("relation_search: height out of range");

    const double t1 = theta1 / (2.0 * kPi);
    const double t2 = theta2 / (2.0 * kPi);

    RelationReport rep;
    double best = 2.0;
    // (m, n, c) and (-m, -n, -c) are the same relation; scan m >= 0 and,
    // on the m = 0 row, n >= 1.
    for (long m = 0; m <= height; ++m) {
        const double mt = m * t1;
        for (long n = (m == 0 ? 1 : -height); n <= height; ++n) {
            if (m == 0 && n == 0) continue;
            const double v = mt + n * t2;
            const double c = std::round(v);
            const double r = std::abs(v - c);
            if (r < best) {
                best = r;
                rep.m = m;
                rep.n = n;
                rep.c = static_cast<long>(c);
            }
        }
    }
    rep.residual = best;
    rep.found = best < tol;

    rational_screen(theta1 / kPi, height, tol, &rep.theta1_rational,
                    &rep.theta1_denominator, &rep.theta1_residual);
    rational_screen(theta2 / kPi, height, tol, &rep.theta2_rational,
                    &rep.theta2_denominator, &rep.theta2_residual);
    return rep;
}

}  // namespace stsign
