// Half-integral-weight coefficient machinery through the Shimura
// correspondence. Coefficients a(t n^2) of a weight k+1/2 eigenform and the
// coefficients A_t(n) of its weight-2k lift determine each other by a
// twisted divisor sum and its Moebius inversion:
//
//   A_t(n)   = sum_{d|n} chi_{t,N}(d) d^(k-1) a(t (n/d)^2)
//   a(t n^2) = sum_{d|n} mu(d) chi_{t,N}(d) d^(k-1) A_t(n/d)
//
// with chi_{t,N}(d) = chi(d) * kronecker((-1)^k N^2 t, d). At prime powers,
// with a(t) = 1 and lambda the normalized lift eigenvalues, this collapses to
//
//   a(t p^(2 nu)) / p^(nu (k - 1/2))
//       = lambda(p^nu) - chi_{t,N}(p)/sqrt(p) * lambda(p^(nu-1)).
//
// Half-integral coefficients here are synthesized from integral-weight
// eigenvalue tables through that relation (a(t) = 1), not computed from
// genuine half-integral eigenforms.

#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "stsign/arith.hpp"
#include "stsign/equidist.hpp"
#include "stsign/newforms.hpp"

namespace stsign {

// Real Dirichlet character given by its value table on residues.
struct RealCharacter {
    std::uint64_t modulus = 1;
    std::vector<signed char> values;  // index d % modulus, values in {-1,0,1}

    int operator()(std::uint64_t d) const {
        return values[static_cast<std::size_t>(d % modulus)];
    }
    // values in {-1,0,1}; zero exactly on gcd(d, modulus) > 1; chi(1) = 1;
    // completely multiplicative on residues.
    void validate() const;
};

RealCharacter trivial_character(std::uint64_t modulus);

// The character mod `modulus` induced by kronecker(disc, .); disc must be a
// fundamental discriminant with |disc| dividing the modulus.
RealCharacter quadratic_character(long long fundamental_disc,
                                  std::uint64_t modulus);

struct HalfIntegralSpec {
    int k = 1;                  // weight k + 1/2
    std::uint64_t level_n = 1;  // N, odd squarefree; character lives mod 4N
    RealCharacter chi;
    std::uint64_t t = 1;        // squarefree; a(t) normalized to 1
    NewformSpec underlying;     // the weight-2k lift supplying lambda values

    void validate() const;
};

// Built-in synthesized pairs: "lift-delta" (k = 6 over the eta-product form)
// and "lift-ec11" (k = 1 over the conductor-11 form). The parity and level
// constraints a genuine lift would satisfy are assumptions of the synthesis,
// not recomputed.
HalfIntegralSpec preset_lift_delta();
HalfIntegralSpec preset_lift_ec11();
HalfIntegralSpec find_halfint_preset(const std::string& label);
std::vector<std::string> halfint_preset_labels();

// JSON spec: {k, N, t, chi: {kind: "trivial" | "table", values?}, underlying}.
HalfIntegralSpec halfint_spec_from_json_file(const std::string& path,
                                             const std::string& cache_dir = "");

// chi_{t,N}(d) = chi(d) * kronecker((-1)^k N^2 t, d).
int chi_tn(const HalfIntegralSpec& spec, std::uint64_t d);

// Forward lift coefficient A_t(n); a[m] must hold a(t m^2) for all m | n
// (1-indexed, a.size() > n).
template <class T>
T shimura_forward(const HalfIntegralSpec& spec, const std::vector<T>& a,
                  std::uint64_t n) {
    if (n < 1 || n >= a.size())
        throw std::out_of_range("shimura_forward: coefficient out of range");
    T sum{};
    for (std::uint64_t d : divisors(n)) {
        const int ch = chi_tn(spec, d);
        if (ch == 0) continue;
        T term = a[static_cast<std::size_t>(n / d)];
        for (int i = 1; i < spec.k; ++i) term *= static_cast<T>(d);
        sum += ch > 0 ? term : -term;
    }
    return sum;
}

// Moebius inversion of the forward map; A[m] must hold A_t(m) for all m | n.
template <class T>
T mobius_inverse(const HalfIntegralSpec& spec, const std::vector<T>& A,
                 std::uint64_t n) {
    if (n < 1 || n >= A.size())
        throw std::out_of_range("mobius_inverse: coefficient out of range");
    T sum{};
    for (std::uint64_t d : divisors(n)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        const int ch = chi_tn(spec, d);
        if (ch == 0) continue;
        T term = A[static_cast<std::size_t>(n / d)];
        for (int i = 1; i < spec.k; ++i) term *= static_cast<T>(d);
        sum += (mu * ch) > 0 ? term : -term;
    }
    return sum;
}

// a(t p^(2 nu)) / p^(nu (k-1/2)), from the underlying lift table. Rejects
// p | 2N and primes beyond the table.
double halfint_normalized(const HalfIntegralSpec& spec,
                          const EigenvalueTable& table, std::uint64_t p,
                          unsigned nu);

// Sign of a(t p^(2 nu)) by comparing sin((nu+1) theta) against
// chi_{t,N}(p)/sqrt(p) * sin(nu theta); 0 when the difference is below
// the zero threshold. Rejects degenerate theta.
int halfint_sign(const HalfIntegralSpec& spec, const EigenvalueTable& table,
                 std::uint64_t p, unsigned nu);

// Sign classes of a1(t1 p^(2 nu)) a2(t2 p^(2 nu)) over primes p <= X,
// excluding p | 2 N1 N2. nu odd.
SignDensityReport halfint_sign_density(const HalfIntegralSpec& spec1,
                                       const EigenvalueTable& table1,
                                       const HalfIntegralSpec& spec2,
                                       const EigenvalueTable& table2,
                                       unsigned nu, std::uint64_t X);

struct EpsilonContainment {
    double eps = 0.0;
    std::uint64_t witnesses = 0;        // primes with both angles in the
                                        // shrunk union (plain or primed)
    std::uint64_t counterexamples = 0;  // witnesses not in the positive class
};

// Per-prime check over p <= X: every p > 1/eps^2 with both angles inside
// the eps-shrunk positive union (or both inside the primed one) must land
// in the positive product class.
EpsilonContainment epsilon_containment(const HalfIntegralSpec& spec1,
                                       const EigenvalueTable& table1,
                                       const HalfIntegralSpec& spec2,
                                       const EigenvalueTable& table2,
                                       unsigned nu, double eps,
                                       std::uint64_t X);

}  // namespace stsign
