// Normalized Hecke eigenvalues lambda(p) = a(p) / p^((k-1)/2) for concrete
// newforms, from three coefficient sources:
//   - the weight-12 level-1 eta-product form (exact tau table),
//   - weight-2 forms attached to rational elliptic curves (point counting),
//   - explicit user-supplied tables (CSV import).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stsign/int128.hpp"

namespace stsign {

struct EllipticCurveCoeffs {
    long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    int128 discriminant() const;
};

enum class NewformSource { EtaProductDelta, EllipticCurve, ExplicitTable };

struct NewformSpec {
    std::string label;
    int weight = 2;            // k, even, >= 2
    std::uint64_t level = 1;   // N
    NewformSource source = NewformSource::EtaProductDelta;
    EllipticCurveCoeffs curve;   // used when source == EllipticCurve
    std::string table_path;      // used when source == ExplicitTable
    bool cm_free = true;         // caller assertion, not verified here

    void validate() const;
};

// Built-in forms: "delta" (weight 12, level 1), "ec11" and "ec37"
// (weight 2, conductors 11 and 37). The elliptic pair is CM-free and the
// two curves are not quadratic twists of each other; both facts are
// standard and recorded here as assertions, not recomputed.
NewformSpec preset_delta();
NewformSpec preset_ec11();
NewformSpec preset_ec37();
NewformSpec find_preset(const std::string& label);
std::vector<std::string> preset_labels();

// Trace of Frobenius a_p = p + 1 - #E(F_p), counting the point at infinity.
// O(p): one quadratic-residue table plus a finite-difference scan of the
// completed-square cubic. Throws on bad reduction (p | discriminant).
long long ec_ap(const EllipticCurveCoeffs& curve, std::uint64_t p);

// Largest n for which the exact tau table is built; beyond it the source
// reports exhaustion instead of approximating.
inline constexpr std::uint64_t kDeltaTableBound = 100'000;

struct EigenvalueTable {
    NewformSpec spec;
    std::uint64_t prime_limit = 0;
    std::vector<std::uint64_t> primes;  // ascending, p not dividing level
    std::vector<int128> ap;             // raw integer coefficients
    std::vector<double> lambda;         // a_p / p^((k-1)/2), |lambda| <= 2

    bool has(std::uint64_t p) const;
    std::size_t index_of(std::uint64_t p) const;
    double lambda_at(std::uint64_t p) const { return lambda[index_of(p)]; }
    int128 ap_at(std::uint64_t p) const { return ap[index_of(p)]; }
};

// lambda(p) for every prime p <= prime_limit with p not dividing the level.
// Enforces the Deligne bound on every entry; a violation is a hard error.
EigenvalueTable build_table(const NewformSpec& spec, std::uint64_t prime_limit);

// Cache file: "# label=<s> weight=<k> level=<N>" then "p,a_p" lines,
// ascending p, exact integers.
void save_table(const EigenvalueTable& table, const std::string& path);
EigenvalueTable load_table(const std::string& path);

// Load "<cache_dir>/<label>_<limit>.csv" if present, else build and save.
// Empty cache_dir disables caching.
EigenvalueTable cached_table(const NewformSpec& spec, std::uint64_t prime_limit,
                             const std::string& cache_dir);

// lambda(p^nu) by the normalized Hecke recurrence
//   lambda(p^(v+1)) = lambda(p) lambda(p^v) - lambda(p^(v-1)),
// lambda(p^0) = 1.
double lambda_power_recurrence(double lambda_p, unsigned nu);

// sin((nu+1) theta) / sin(theta), with the limiting value (nu+1)(+-1)^nu
// at theta = 0, pi.
double lambda_power_trig(double theta_p, unsigned nu);

// Table-backed lambda(p^nu); rejects ramified p (p | level) and p beyond
// the table.
double lambda_prime_power(const EigenvalueTable& table, std::uint64_t p,
                          unsigned nu);

}  // namespace stsign
