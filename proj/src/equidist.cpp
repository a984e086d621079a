#include "stsign/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "stsign/angles.hpp"
#include "stsign/measures.hpp"

namespace stsign {

namespace {

bool in_box(double f1, double f2, const Box2& b) {
    return f1 >= b.u1 && f1 <= b.v1 && f2 >= b.u2 && f2 <= b.v2;
}

void validate_box(const Box2& b) {
    if (!(b.u1 >= 0.0 && b.u1 <= b.v1 && b.v1 <= 1.0 && b.u2 >= 0.0 &&
          b.u2 <= b.v2 && b.v2 <= 1.0))
        throw std::invalid_argument("box must satisfy 0 <= u <= v <= 1");
}

double fract(double v) { return v - std::floor(v); }

// Angle of a table prime, rejecting the degenerate endpoints.
double nondegenerate_angle(const EigenvalueTable& t, std::uint64_t p) {
    const double theta = sato_tate_angle(t.lambda_at(p));
    if (theta == 0.0 || theta == kPi)
        throw std::domain_error(
            "degenerate Sato-Tate angle (theta = 0 or pi) at p = " +
            std::to_string(p));
    return theta;
}

int classify(double product) {
    if (std::abs(product) < kZeroThreshold) return 0;
    return product > 0.0 ? 1 : -1;
}

// The recurrence and the sine-quotient evaluation must agree; asserted on
// the experiment path for nu <= 200 whenever sin(theta) is not tiny.
void assert_paths_agree(double rec_value, double trig_value, double sin_theta,
                        unsigned nu) {
    if (nu > 200 || std::abs(sin_theta) <= 1e-12) return;
    const double tol = 1e-9 * std::max(1.0, std::abs(trig_value));
    if (std::abs(rec_value - trig_value) > tol)
        throw std::logic_error(
            "recurrence and trigonometric eigenvalue paths disagree");
}

}  // namespace

void finalize_sign_densities(SignDensityReport* r) {
    const double den = static_cast<double>(r->denominator);
    if (r->denominator > 0) {
        r->pos = r->n_pos / den;
        r->neg = r->n_neg / den;
        r->zero = r->n_zero / den;
        r->pos_closed = (r->n_pos + r->n_zero) / den;
        r->neg_closed = (r->n_neg + r->n_zero) / den;
    }
    const std::uint64_t nonzero = r->n_pos + r->n_neg;
    if (nonzero > 0) {
        r->pos_nonzero = r->n_pos / static_cast<double>(nonzero);
        r->neg_nonzero = r->n_neg / static_cast<double>(nonzero);
    }
}

double weyl_box_proportion(double theta1, double theta2, const Box2& box,
                           std::uint64_t x) {
    validate_box(box);
    if (x < 1) throw std::invalid_argument("weyl_box_proportion: x >= 1");
    const double t1 = theta1 / (2.0 * kPi);
    const double t2 = theta2 / (2.0 * kPi);
    std::uint64_t count = 0;
    for (std::uint64_t nu = 1; nu <= x; ++nu) {
        const double f1 = fract(nu * t1);
        const double f2 = fract(nu * t2);
        if (in_box(f1, f2, box)) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(x);
}

WeylOrbitStats weyl_orbit_stats(double theta1, double theta2, std::uint64_t x,
                                const std::vector<Box2>& boxes) {
    if (x < 1) throw std::invalid_argument("weyl_orbit_stats: x >= 1");
    for (const Box2& b : boxes) validate_box(b);

    WeylOrbitStats st;
    st.theta1 = theta1;
    st.theta2 = theta2;
    st.x = x;
    st.boxes.resize(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) st.boxes[i].box = boxes[i];

    constexpr int G = 64;
    std::vector<std::uint64_t> grid(G * G, 0);
    const double t1 = theta1 / (2.0 * kPi);
    const double t2 = theta2 / (2.0 * kPi);
    for (std::uint64_t nu = 1; nu <= x; ++nu) {
        const double f1 = fract(nu * t1);
        const double f2 = fract(nu * t2);
        for (std::size_t i = 0; i < boxes.size(); ++i)
            if (in_box(f1, f2, boxes[i])) ++st.boxes[i].count;
        const int c1 = std::min(G - 1, static_cast<int>(f1 * G));
        const int c2 = std::min(G - 1, static_cast<int>(f2 * G));
        ++grid[c1 * G + c2];
    }
    for (auto& bc : st.boxes)
        bc.proportion = static_cast<double>(bc.count) / static_cast<double>(x);

    // 2-d prefix sums; prefix(i, j) counts points with f1 < i/G, f2 < j/G.
    std::vector<std::uint64_t> prefix((G + 1) * (G + 1), 0);
    for (int i = 1; i <= G; ++i)
        for (int j = 1; j <= G; ++j)
            prefix[i * (G + 1) + j] = grid[(i - 1) * G + (j - 1)] +
                                      prefix[(i - 1) * (G + 1) + j] +
                                      prefix[i * (G + 1) + (j - 1)] -
                                      prefix[(i - 1) * (G + 1) + (j - 1)];
    double disc = 0.0;
    for (int i = 1; i <= G; ++i)
        for (int j = 1; j <= G; ++j) {
            const double emp =
                static_cast<double>(prefix[i * (G + 1) + j]) / double(x);
            const double area = (double(i) / G) * (double(j) / G);
            disc = std::max(disc, std::abs(emp - area));
        }
    st.discrepancy = disc;
    return st;
}

SignDensityReport sign_product_proportion_nu(const EigenvalueTable& t1,
                                             const EigenvalueTable& t2,
                                             std::uint64_t p, std::uint64_t x) {
    if (x < 1) throw std::invalid_argument("sign_product_proportion_nu: x >= 1");
    if (t1.spec.level % p == 0 || t2.spec.level % p == 0)
        throw std::domain_error("p divides a level; ramified primes excluded");
    const double l1 = t1.lambda_at(p);
    const double l2 = t2.lambda_at(p);
    const double th1 = nondegenerate_angle(t1, p);
    const double th2 = nondegenerate_angle(t2, p);
    const double s1 = std::sin(th1);
    const double s2 = std::sin(th2);

    SignDensityReport rep;
    rep.range = x;
    rep.denominator = x;
    for (std::uint64_t nu = 1; nu <= x; ++nu) {
        const double v1 = std::sin((nu + 1) * th1) / s1;
        const double v2 = std::sin((nu + 1) * th2) / s2;
        if (nu <= 200) {
            const unsigned un = static_cast<unsigned>(nu);
            assert_paths_agree(lambda_power_recurrence(l1, un), v1, s1, un);
            assert_paths_agree(lambda_power_recurrence(l2, un), v2, s2, un);
        }
        switch (classify(v1 * v2)) {
            case 1: ++rep.n_pos; break;
            case -1: ++rep.n_neg; break;
            default: ++rep.n_zero; break;
        }
    }
    finalize_sign_densities(&rep);
    return rep;
}

SignDensityReport prime_sign_density(const EigenvalueTable& t1,
                                     const EigenvalueTable& t2, unsigned nu,
                                     std::uint64_t X) {
    if (nu % 2 == 0 || nu < 1)
        throw std::invalid_argument("prime_sign_density: nu must be odd");
    if (t1.prime_limit < X || t2.prime_limit < X)
        throw std::invalid_argument("prime_sign_density: tables do not cover X");

    SignDensityReport rep;
    rep.range = X;
    for (std::size_t i = 0; i < t1.primes.size(); ++i) {
        const std::uint64_t p = t1.primes[i];
        if (p > X) break;
        if (t2.spec.level % p == 0) continue;
        ++rep.denominator;
        const double v1 = lambda_power_recurrence(t1.lambda[i], nu);
        const double v2 = lambda_power_recurrence(t2.lambda_at(p), nu);
        const double th1 = sato_tate_angle(t1.lambda[i]);
        const double th2 = sato_tate_angle(t2.lambda_at(p));
        assert_paths_agree(v1, lambda_power_trig(th1, nu), std::sin(th1), nu);
        assert_paths_agree(v2, lambda_power_trig(th2, nu), std::sin(th2), nu);
        switch (classify(v1 * v2)) {
            case 1: ++rep.n_pos; break;
            case -1: ++rep.n_neg; break;
            default: ++rep.n_zero; break;
        }
    }
    finalize_sign_densities(&rep);
    return rep;
}

PairHistogram pair_st_gof(const EigenvalueTable& t1, const EigenvalueTable& t2,
                          std::uint64_t X, int bins) {
    if (bins < 1) throw std::invalid_argument("pair_st_gof: bins >= 1");
    if (t1.prime_limit < X || t2.prime_limit < X)
        throw std::invalid_argument("pair_st_gof: tables do not cover X");

    PairHistogram h;
    h.bins = bins;
    h.counts.assign(std::size_t(bins) * bins, 0);
    h.expected.assign(std::size_t(bins) * bins, 0.0);

    std::vector<double> th1s, th2s;
    for (std::size_t i = 0; i < t1.primes.size(); ++i) {
        const std::uint64_t p = t1.primes[i];
        if (p > X) break;
        if (t2.spec.level % p == 0) continue;
        const double a1 = sato_tate_angle(t1.lambda[i]);
        const double a2 = sato_tate_angle(t2.lambda_at(p));
        th1s.push_back(a1);
        th2s.push_back(a2);
        const int c1 = std::min(bins - 1, static_cast<int>(a1 / kPi * bins));
        const int c2 = std::min(bins - 1, static_cast<int>(a2 / kPi * bins));
        ++h.counts[std::size_t(c1) * bins + c2];
        ++h.total;
    }

    std::vector<double> cell_mass(bins);
    for (int i = 0; i < bins; ++i)
        cell_mass[i] = st_cdf((i + 1) * kPi / bins) - st_cdf(i * kPi / bins);
    for (int i = 0; i < bins; ++i)
        for (int j = 0; j < bins; ++j)
            h.expected[std::size_t(i) * bins + j] =
                static_cast<double>(h.total) * cell_mass[i] * cell_mass[j];

    for (std::size_t c = 0; c < h.counts.size(); ++c) {
        const double e = h.expected[c];
        if (e > 0.0) {
            const double d = static_cast<double>(h.counts[c]) - e;
            h.chi_square += d * d / e;
        }
    }
    h.ks1 = ks_distance_vs_st(std::move(th1s));
    h.ks2 = ks_distance_vs_st(std::move(th2s));
    return h;
}

SinBoxCheck sin_box_proportion_check(double theta1, double theta2, double a,
                                     double b, std::uint64_t x) {
    if (x < 1) throw std::invalid_argument("sin_box_proportion_check: x >= 1");
    const double m = sin_box_measure(a, b);  // validates [a, b]
    std::uint64_t count = 0;
    for (std::uint64_t nu = 1; nu <= x; ++nu) {
        const double s1 = std::sin(nu * theta1);
        const double s2 = std::sin(nu * theta2);
        if (s1 >= a && s1 <= b && s2 >= a && s2 <= b) ++count;
    }
    SinBoxCheck chk;
    chk.empirical = static_cast<double>(count) / static_cast<double>(x);
    chk.predicted = m * m;
    return chk;
}

double st_cdf_inverse(double u) {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("st_cdf_inverse: u outside [0, 1]");
    double lo = 0.0, hi = kPi;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (st_cdf(mid) < u)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::pair<double, double>> sample_pair_st(std::uint64_t n,
                                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<std::pair<double, double>> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u1 = unit();
        const double u2 = unit();
        out.emplace_back(st_cdf_inverse(u1), st_cdf_inverse(u2));
    }
    return out;
}

double ks_distance_vs_st(std::vector<double> thetas) {
    if (thetas.empty())
        throw std::invalid_argument("ks_distance_vs_st: empty sample");
    std::sort(thetas.begin(), thetas.end());
    const double n = static_cast<double>(thetas.size());
    double d = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const double f = st_cdf(thetas[i]);
        d = std::max(d, std::max(f - double(i) / n, double(i + 1) / n - f));
    }
    return d;
}

}  // namespace stsign
