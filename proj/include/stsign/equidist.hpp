// Empirical experiments: orbit statistics modulo one, sign densities of
// eigenvalue products over exponents and over primes, and goodness of fit of
// paired angle sequences against the 2-product Sato-Tate measure.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stsign/newforms.hpp"

namespace stsign {

// Products of normalized eigenvalues below this magnitude count as zero.
// Double precision cannot certify exact vanishing; the recurrence path
// produces exact zeros for a_p = 0, which this threshold always catches.
inline constexpr double kZeroThreshold = 1e-12;

// Closed box [u1, v1] x [u2, v2] inside [0, 1]^2.
struct Box2 {
    double u1 = 0.0, v1 = 1.0, u2 = 0.0, v2 = 1.0;
};

struct SignDensityReport {
    std::uint64_t range = 0;        // x (exponent mode) or X (prime mode)
    std::uint64_t n_pos = 0, n_neg = 0, n_zero = 0;
    std::uint64_t denominator = 0;  // x, or primes counted after exclusions
    double pos = 0.0, neg = 0.0, zero = 0.0;
    double pos_nonzero = 0.0, neg_nonzero = 0.0;  // among nonzero terms
    double pos_closed = 0.0, neg_closed = 0.0;    // >=0 and <=0 classes
};

struct WeylBoxCount {
    Box2 box;
    std::uint64_t count = 0;
    double proportion = 0.0;
};

struct WeylOrbitStats {
    double theta1 = 0.0, theta2 = 0.0;
    std::uint64_t x = 0;
    std::vector<WeylBoxCount> boxes;
    // Max deviation |count/x - area| over the 64x64 grid of anchored
    // half-open boxes [0, i/64) x [0, j/64).
    double discrepancy = 0.0;
};

struct PairHistogram {
    int bins = 0;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> counts;  // row-major bins x bins
    std::vector<double> expected;       // total * cell product measure
    double chi_square = 0.0;
    double ks1 = 0.0, ks2 = 0.0;  // marginal KS distances against st_cdf
};

struct SinBoxCheck {
    double empirical = 0.0;
    double predicted = 0.0;
};

// Fill the density fields of a report from its counts.
void finalize_sign_densities(SignDensityReport* report);

// (1/x) #{ nu <= x : ({nu theta1 / 2pi}, {nu theta2 / 2pi}) in box }.
double weyl_box_proportion(double theta1, double theta2, const Box2& box,
                           std::uint64_t x);

WeylOrbitStats weyl_orbit_stats(double theta1, double theta2, std::uint64_t x,
                                const std::vector<Box2>& boxes);

// Signs of lambda1(p^nu) lambda2(p^nu) over nu <= x at a fixed prime p,
// each factor evaluated in O(1) through the sine-quotient form. Reports
// densities both per x and per nonzero term. Rejects degenerate angles
// (theta_p in {0, pi}) and p dividing either level.
SignDensityReport sign_product_proportion_nu(const EigenvalueTable& t1,
                                             const EigenvalueTable& t2,
                                             std::uint64_t p, std::uint64_t x);

// Signs of lambda1(p^nu) lambda2(p^nu) over primes p <= X (odd nu, ramified
// primes excluded), evaluated by the Hecke recurrence.
SignDensityReport prime_sign_density(const EigenvalueTable& t1,
                                     const EigenvalueTable& t2, unsigned nu,
                                     std::uint64_t X);

// bins x bins histogram of (theta1(p), theta2(p)) over shared good primes
// p <= X, with expected cell masses from the product Sato-Tate measure,
// Pearson chi-square, and marginal KS distances.
PairHistogram pair_st_gof(const EigenvalueTable& t1, const EigenvalueTable& t2,
                          std::uint64_t X, int bins);

// Proportion of nu <= x with (sin(nu theta1), sin(nu theta2)) in [a, b]^2,
// against the product of exact sine preimage measures.
SinBoxCheck sin_box_proportion_check(double theta1, double theta2, double a,
                                     double b, std::uint64_t x);

// Inverse of st_cdf on [0, pi], by bisection.
double st_cdf_inverse(double u);

// Seeded synthetic sampler: n independent pairs drawn exactly from the
// 2-product Sato-Tate measure through inverse-CDF sampling.
std::vector<std::pair<double, double>> sample_pair_st(std::uint64_t n,
                                                      std::uint64_t seed);

// Kolmogorov-Smirnov distance of a sample against st_cdf.
double ks_distance_vs_st(std::vector<double> thetas);

}  // namespace stsign
