// Sato-Tate angles theta_p in [0, pi] with lambda(p) = 2 cos(theta_p), and an
// exhaustive integer-relation screen for the rational-independence hypothesis
// of the nu-aspect experiments.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stsign/newforms.hpp"

namespace stsign {

// theta = arccos(lambda/2). Inputs within 1e-12 of +-2 are clamped; anything
// further outside [-2, 2] means a broken table upstream and is a hard error.
double sato_tate_angle(double lambda_p);

struct AngleSequence {
    std::string label;
    std::vector<std::uint64_t> primes;  // ascending
    std::vector<double> theta;          // theta[i] for primes[i]

    double theta_at(std::uint64_t p) const;
};

AngleSequence angle_sequence(const EigenvalueTable& table);

struct RelationReport {
    bool found = false;
    long m = 0, n = 0, c = 0;  // m t1 + n t2 ~ c with t_i = theta_i / 2pi
    double residual = 0.0;     // smallest |m t1 + n t2 - c| over the scan

    // Single-angle screens: is theta_i / pi close to a rational with
    // denominator <= height?
    bool theta1_rational = false;
    long theta1_denominator = 0;
    double theta1_residual = 0.0;
    bool theta2_rational = false;
    long theta2_denominator = 0;
    double theta2_residual = 0.0;
};

// Exhaustive scan over |m|, |n| <= height, c the nearest integer. Reports
// the minimal-residual relation; found iff that residual < tol. This is a
// screen, not a certificate: independence over Q is undecidable from
// finite-precision data.
RelationReport relation_search(double theta1, double theta2, long height,
                               double tol);

inline constexpr long kDefaultRelationHeight = 1000;
inline constexpr double kDefaultRelationTol = 1e-9;

}  // namespace stsign
