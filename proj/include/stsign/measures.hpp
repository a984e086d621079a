// Closed-form Sato-Tate measure evaluation on finite unions of open
// subintervals of [0, pi], the sign-pattern unions attached to an odd prime
// power exponent, their epsilon-shrunk variants, and the circle measure of a
// sine preimage.

#pragma once

#include <utility>
#include <vector>

namespace stsign {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Ascending, pairwise disjoint open intervals (a, b) inside [0, pi].
class IntervalUnion {
  public:
    explicit IntervalUnion(std::vector<std::pair<double, double>> parts);

    const std::vector<std::pair<double, double>>& parts() const {
        return parts_;
    }
    bool contains(double theta) const;  // open-interval membership
    double total_length() const;

  private:
    std::vector<std::pair<double, double>> parts_;
};

// CDF of the Sato-Tate density (2/pi) sin^2(theta) on [0, pi]:
// (theta - sin(theta) cos(theta)) / pi, clamped to [0, 1].
double st_cdf(double theta);

// Sato-Tate mass of a union: sum of st_cdf(b) - st_cdf(a) over parts.
double st_measure(const IntervalUnion& u);

// Product mass st_measure(u1) * st_measure(u2) of u1 x u2 under the
// 2-product Sato-Tate measure.
double product_measure(const IntervalUnion& u1, const IntervalUnion& u2);

// For odd nu, the set of theta with sin((nu+1) theta) of the given sign:
//   +1: union over j of ( 2(j-1)pi/(nu+1), (2j-1)pi/(nu+1) )
//   -1: union over j of ( (2j-1)pi/(nu+1),     2j pi/(nu+1) )
// with j = 1 .. (nu+1)/2.
IntervalUnion sign_interval_union(unsigned nu, int sign);

// Epsilon-shrunk versions: theta with sin((nu+1) theta) > eps (primed:
// < -eps). eps in [0, 1); eps = 0 reduces to sign_interval_union.
IntervalUnion epsilon_interval_union(unsigned nu, double eps, bool primed);

// Lebesgue measure of { u in [0,1) : sin(2 pi u) in [a, b] }, by case
// analysis over the four monotone branches of sine on one period.
double sin_box_measure(double a, double b);

}  // namespace stsign
