#include "stsign/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stsign {

IntervalUnion::IntervalUnion(std::vector<std::pair<double, double>> parts)
    : parts_(std::move(parts)) {
    double prev_end = 0.0;
    for (const auto& [a, b] : parts_) {
        if (!(a >= prev_end && a < b && b <= kPi + 1e-15))
            throw std::invalid_argument(
                "IntervalUnion: parts must be disjoint ascending open "
                "intervals inside [0, pi]");
        prev_end = b;
    }
}

bool IntervalUnion::contains(double theta) const {
    for (const auto& [a, b] : parts_)
        if (theta > a && theta < b) return true;
    return false;
}

double IntervalUnion::total_length() const {
    double s = 0.0;
    for (const auto& [a, b] : parts_) s += b - a;
    return s;
}

double st_cdf(double theta) {
    if (theta < -1e-12 || theta > kPi + 1e-12)
        throw std::domain_error("st_cdf: theta outside [0, pi]");
    theta = std::clamp(theta, 0.0, kPi);
    const double v = (theta - 0.5 * std::sin(2.0 * theta)) / kPi;
    return std::clamp(v, 0.0, 1.0);
}

double st_measure(const IntervalUnion& u) {
    double s = 0.0;
    for (const auto& [a, b] : u.parts()) s += st_cdf(b) - st_cdf(a);
    return std::clamp(s, 0.0, 1.0);
}

double product_measure(const IntervalUnion& u1, const IntervalUnion& u2) {
    return st_measure(u1) * st_measure(u2);
}

namespace {

IntervalUnion shrunk_union(unsigned nu, double margin, bool primed) {
    if (nu % 2 == 0 || nu < 1)
        throw std::invalid_argument("sign intervals need odd nu >= 1");
    std::vector<std::pair<double, double>> parts;
    const unsigned half = (nu + 1) / 2;
    const double denom = nu + 1;
    for (unsigned j = 1; j <= half; ++j) {
        double lo, hi;
        if (!primed) {
            lo = ((2.0 * j - 2.0) * kPi + margin) / denom;
            hi = ((2.0 * j - 1.0) * kPi - margin) / denom;
        } else {
            lo = ((2.0 * j - 1.0) * kPi + margin) / denom;
            hi = (2.0 * j * kPi - margin) / denom;
        }
        parts.emplace_back(lo, hi);
    }
    return IntervalUnion(std::move(parts));
}

}  // namespace

IntervalUnion sign_interval_union(unsigned nu, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign_interval_union: sign must be +-1");
    return shrunk_union(nu, 0.0, sign < 0);
}

IntervalUnion epsilon_interval_union(unsigned nu, double eps, bool primed) {
    if (!(eps >= 0.0 && eps < 1.0))
        throw std::invalid_argument(
            "epsilon_interval_union: eps must lie in [0, 1)");
    return shrunk_union(nu, std::asin(eps), primed);
}

double sin_box_measure(double a, double b) {
    if (!(a >= -1.0 && a <= b && b <= 1.0))
        throw std::domain_error("sin_box_measure: need -1 <= a <= b <= 1");
    // One period of sin(2 pi u) splits into four monotone branches; the
    // preimage length of [a, b] under each is an arcsine difference. The
    // two branches through positive values see [a, b] clipped to [0, 1],
    // the two through negative values see it clipped to [-1, 0].
    double total = 0.0;
    {
        const double lo = std::max(a, 0.0), hi = std::max(b, 0.0);
        total += 2.0 * (std::asin(hi) - std::asin(lo));
    }
    {
        const double lo = std::min(a, 0.0), hi = std::min(b, 0.0);
        total += 2.0 * (std::asin(hi) - std::asin(lo));
    }
    return std::clamp(total / (2.0 * kPi), 0.0, 1.0);
}

}  // namespace stsign
