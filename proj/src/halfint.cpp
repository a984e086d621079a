#include "stsign/halfint.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "stsign/angles.hpp"
#include "stsign/measures.hpp"

namespace stsign {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

bool is_fundamental_discriminant(long long d) {
    if (d == 0 || d == 1) return false;
    long long m = d % 4;
    if (m < 0) m += 4;
    if (m == 1) return is_squarefree(static_cast<std::uint64_t>(std::llabs(d)));
    if (m != 0) return false;
    const long long q = d / 4;
    long long qm = q % 4;
    if (qm < 0) qm += 4;
    return (qm == 2 || qm == 3) &&
           is_squarefree(static_cast<std::uint64_t>(std::llabs(q)));
}

}  // namespace

void RealCharacter::validate() const {
    if (modulus < 1 || values.size() != modulus)
        throw std::invalid_argument("RealCharacter: value table size != modulus");
    for (std::uint64_t d = 0; d < modulus; ++d) {
        const int v = values[d];
        if (v < -1 || v > 1)
            throw std::invalid_argument("RealCharacter: values must be in {-1,0,1}");
        const bool coprime = gcd_u64(d % modulus, modulus) == 1 || modulus == 1;
        if (coprime != (v != 0))
            throw std::invalid_argument(
                "RealCharacter: must vanish exactly off the units");
    }
    if ((*this)(1) != 1)
        throw std::invalid_argument("RealCharacter: chi(1) must be 1");
    for (std::uint64_t a = 0; a < modulus; ++a)
        for (std::uint64_t b = a; b < modulus; ++b)
            if (int(values[a]) * values[b] != (*this)(a * b))
                throw std::invalid_argument(
                    "RealCharacter: not completely multiplicative");
}

RealCharacter trivial_character(std::uint64_t modulus) {
    RealCharacter chi;
    chi.modulus = modulus;
    chi.values.resize(modulus);
    for (std::uint64_t d = 0; d < modulus; ++d)
        chi.values[d] =
            (modulus == 1 || gcd_u64(d, modulus) == 1) ? 1 : 0;
    chi.validate();
    return chi;
}

RealCharacter quadratic_character(long long fundamental_disc,
                                  std::uint64_t modulus) {
    if (!is_fundamental_discriminant(fundamental_disc))
        throw std::invalid_argument(
            "quadratic_character: not a fundamental discriminant");
    const std::uint64_t ad =
        static_cast<std::uint64_t>(std::llabs(fundamental_disc));
    if (modulus % ad != 0)
        throw std::invalid_argument(
            "quadratic_character: |disc| must divide the modulus");
    RealCharacter chi;
    chi.modulus = modulus;
    chi.values.resize(modulus);
    for (std::uint64_t d = 0; d < modulus; ++d)
        chi.values[d] =
            (gcd_u64(d, modulus) == 1)
                ? static_cast<signed char>(
                      kronecker(fundamental_disc, static_cast<long long>(d)))
                : 0;
    chi.validate();
    return chi;
}

void HalfIntegralSpec::validate() const {
    if (k < 1) throw std::invalid_argument("HalfIntegralSpec: k must be >= 1");
    if (level_n % 2 == 0 || !is_squarefree(level_n))
        throw std::invalid_argument(
            "HalfIntegralSpec: N must be odd and squarefree");
    if (!is_squarefree(t))
        throw std::invalid_argument("HalfIntegralSpec: t must be squarefree");
    if (chi.modulus != 4 * level_n)
        throw std::invalid_argument(
            "HalfIntegralSpec: character modulus must be 4N");
    chi.validate();
    underlying.validate();
    if (underlying.weight != 2 * k)
        throw std::invalid_argument(
            "HalfIntegralSpec: underlying weight must equal 2k");
}

HalfIntegralSpec preset_lift_delta() {
    HalfIntegralSpec s;
    s.k = 6;
    s.level_n = 1;
    s.chi = trivial_character(4);
    s.t = 1;
    s.underlying = preset_delta();
    s.validate();
    return s;
}

HalfIntegralSpec preset_lift_ec11() {
    HalfIntegralSpec s;
    s.k = 1;
    s.level_n = 11;
    s.chi = trivial_character(44);
    s.t = 1;
    s.underlying = preset_ec11();
    s.validate();
    return s;
}

HalfIntegralSpec find_halfint_preset(const std::string& label) {
    if (label == "lift-delta") return preset_lift_delta();
    if (label == "lift-ec11") return preset_lift_ec11();
    throw std::invalid_argument("unknown half-integral preset: " + label);
}

std::vector<std::string> halfint_preset_labels() {
    return {"lift-delta", "lift-ec11"};
}

HalfIntegralSpec halfint_spec_from_json_file(const std::string& path,
                                             const std::string& cache_dir) {
    (void)cache_dir;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);

    HalfIntegralSpec s;
    s.k = j.at("k").get<int>();
    s.level_n = j.at("N").get<std::uint64_t>();
    s.t = j.at("t").get<std::uint64_t>();
    const auto& jc = j.at("chi");
    const std::string kind = jc.at("kind").get<std::string>();
    if (kind == "trivial") {
        s.chi = trivial_character(4 * s.level_n);
    } else if (kind == "table") {
        s.chi.modulus = 4 * s.level_n;
        for (int v : jc.at("values").get<std::vector<int>>())
            s.chi.values.push_back(static_cast<signed char>(v));
    } else {
        throw std::runtime_error("unknown chi kind in " + path + ": " + kind);
    }
    s.underlying = find_preset(j.at("underlying").get<std::string>());
    s.validate();
    return s;
}

int chi_tn(const HalfIntegralSpec& spec, std::uint64_t d) {
    const int c = spec.chi(d);
    if (c == 0) return 0;
    const long long n2t =
        static_cast<long long>(spec.level_n * spec.level_n * spec.t);
    const long long arg = (spec.k % 2 == 0) ? n2t : -n2t;
    return c * kronecker(arg, static_cast<long long>(d));
}

namespace {

void check_unramified(const HalfIntegralSpec& spec, std::uint64_t p) {
    if (p == 2 || spec.level_n % p == 0)
        throw std::domain_error(
            "half-integral relations exclude p | 2N; got p = " +
            std::to_string(p));
}

}  // namespace

double halfint_normalized(const HalfIntegralSpec& spec,
                          const EigenvalueTable& table, std::uint64_t p,
                          unsigned nu) {
    if (nu < 1)
        throw std::invalid_argument("halfint_normalized: nu must be >= 1");
    check_unramified(spec, p);
    const double lp = table.lambda_at(p);
    const double main = lambda_power_recurrence(lp, nu);
    const double prev = lambda_power_recurrence(lp, nu - 1);
    return main - chi_tn(spec, p) / std::sqrt(double(p)) * prev;
}

int halfint_sign(const HalfIntegralSpec& spec, const EigenvalueTable& table,
                 std::uint64_t p, unsigned nu) {
    if (nu < 1) throw std::invalid_argument("halfint_sign: nu must be >= 1");
    check_unramified(spec, p);
    const double theta = sato_tate_angle(table.lambda_at(p));
    if (theta == 0.0 || theta == kPi)
        throw std::domain_error("halfint_sign: degenerate angle at p = " +
                                std::to_string(p));
    const double lhs = std::sin((nu + 1) * theta);
    const double rhs =
        chi_tn(spec, p) / std::sqrt(double(p)) * std::sin(nu * theta);
    const double diff = lhs - rhs;
    if (std::abs(diff) < kZeroThreshold) return 0;
    return diff > 0.0 ? 1 : -1;
}

SignDensityReport halfint_sign_density(const HalfIntegralSpec& spec1,
                                       const EigenvalueTable& table1,
                                       const HalfIntegralSpec& spec2,
                                       const EigenvalueTable& table2,
                                       unsigned nu, std::uint64_t X) {
    if (nu % 2 == 0 || nu < 1)
        throw std::invalid_argument("halfint_sign_density: nu must be odd");
    if (table1.prime_limit < X || table2.prime_limit < X)
        throw std::invalid_argument("halfint_sign_density: tables do not cover X");

    SignDensityReport rep;
    rep.range = X;
    for (std::size_t i = 0; i < table1.primes.size(); ++i) {
        const std::uint64_t p = table1.primes[i];
        if (p > X) break;
        if (p == 2 || spec1.level_n % p == 0 || spec2.level_n % p == 0 ||
            table2.spec.level % p == 0)
            continue;
        ++rep.denominator;
        const double v1 = halfint_normalized(spec1, table1, p, nu);
        const double v2 = halfint_normalized(spec2, table2, p, nu);
        const double product = v1 * v2;
        if (std::abs(product) < kZeroThreshold)
            ++rep.n_zero;
        else if (product > 0.0)
            ++rep.n_pos;
        else
            ++rep.n_neg;
    }
    finalize_sign_densities(&rep);
    return rep;
}

EpsilonContainment epsilon_containment(const HalfIntegralSpec& spec1,
                                       const EigenvalueTable& table1,
                                       const HalfIntegralSpec& spec2,
                                       const EigenvalueTable& table2,
                                       unsigned nu, double eps,
                                       std::uint64_t X) {
    if (nu % 2 == 0 || nu < 1)
        throw std::invalid_argument("epsilon_containment: nu must be odd");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("epsilon_containment: eps must be in (0,1)");
    if (table1.prime_limit < X || table2.prime_limit < X)
        throw std::invalid_argument("epsilon_containment: tables do not cover X");

    const IntervalUnion plain = epsilon_interval_union(nu, eps, false);
    const IntervalUnion primed = epsilon_interval_union(nu, eps, true);
    const double p_floor = 1.0 / (eps * eps);

    EpsilonContainment out;
    out.eps = eps;
    for (std::size_t i = 0; i < table1.primes.size(); ++i) {
        const std::uint64_t p = table1.primes[i];
        if (p > X) break;
        if (static_cast<double>(p) <= p_floor) continue;
        if (p == 2 || spec1.level_n % p == 0 || spec2.level_n % p == 0 ||
            table2.spec.level % p == 0)
            continue;
        const double th1 = sato_tate_angle(table1.lambda[i]);
        const double th2 = sato_tate_angle(table2.lambda_at(p));
        const bool both_plain = plain.contains(th1) && plain.contains(th2);
        const bool both_primed = primed.contains(th1) && primed.contains(th2);
        if (!both_plain && !both_primed) continue;
        ++out.witnesses;
        const int s1 = halfint_sign(spec1, table1, p, nu);
        const int s2 = halfint_sign(spec2, table2, p, nu);
        if (s1 * s2 != 1) ++out.counterexamples;
    }
    return out;
}

}  // namespace stsign
