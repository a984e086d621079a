#include "stsign/newforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "stsign/arith.hpp"
#include "stsign/qseries.hpp"

namespace stsign {

int128 EllipticCurveCoeffs::discriminant() const {
    const int128 v1 = a1, v2 = a2, v3 = a3, v4 = a4, v6 = a6;
    const int128 b2 = v1 * v1 + 4 * v2;
    const int128 b4 = 2 * v4 + v1 * v3;
    const int128 b6 = v3 * v3 + 4 * v6;
    const int128 b8 = v1 * v1 * v6 + 4 * v2 * v6 - v1 * v3 * v4 + v2 * v3 * v3 - v4 * v4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

void NewformSpec::validate() const {
    if (weight < 2 || weight % 2 != 0)
        throw std::invalid_argument("NewformSpec: weight must be even and >= 2");
    if (level < 1) throw std::invalid_argument("NewformSpec: level must be >= 1");
    switch (source) {
        case NewformSource::EtaProductDelta:
            if (weight != 12 || level != 1)
                throw std::invalid_argument(
                    "NewformSpec: eta-product source is weight 12, level 1");
            break;
        case NewformSource::EllipticCurve:
            if (weight != 2)
                throw std::invalid_argument(
                    "NewformSpec: elliptic-curve source is weight 2");
            break;
        case NewformSource::ExplicitTable:
            break;
    }
}

NewformSpec preset_delta() {
    NewformSpec s;
    s.label = "delta";
    s.weight = 12;
    s.level = 1;
    s.source = NewformSource::EtaProductDelta;
    s.cm_free = true;
    return s;
}

NewformSpec preset_ec11() {
    NewformSpec s;
    s.label = "ec11";
    s.weight = 2;
    s.level = 11;
    s.source = NewformSource::EllipticCurve;
    s.curve = {0, -1, 1, -10, -20};
    s.cm_free = true;
    return s;
}

NewformSpec preset_ec37() {
    NewformSpec s;
    s.label = "ec37";
    s.weight = 2;
    s.level = 37;
    s.source = NewformSource::EllipticCurve;
    s.curve = {0, 0, 1, -1, 0};
    s.cm_free = true;
    return s;
}

NewformSpec find_preset(const std::string& label) {
    if (label == "delta") return preset_delta();
    if (label == "ec11") return preset_ec11();
    if (label == "ec37") return preset_ec37();
    throw std::invalid_argument("unknown form label: " + label);
}

std::vector<std::string> preset_labels() { return {"delta", "ec11", "ec37"}; }

namespace {

// Number of solutions of y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// over F_2, by direct enumeration.
long long ec_ap_two(const EllipticCurveCoeffs& c) {
    auto m2 = [](long long v) { return ((v % 2) + 2) % 2; };
    int count = 0;
    for (long long x = 0; x < 2; ++x)
        for (long long y = 0; y < 2; ++y) {
            long long lhs = m2(y * y + c.a1 * x * y + c.a3 * y);
            long long rhs = m2(x * x * x + c.a2 * x * x + c.a4 * x + c.a6);
            if (lhs == rhs) ++count;
        }
    return 2 + 1 - (count + 1);
}

// Odd p: complete the square. With w = 2y + a1 x + a3 the equation becomes
// w^2 = G(x) := 4x^3 + b2 x^2 + 2 b4 x + b6, so the affine count is
// p + sum_x chi(G(x)) with chi the quadratic character mod p, giving
// a_p = -sum_x chi(G(x)). G is walked by finite differences; chi comes from
// a residue table filled with the squares of F_p.
long long ec_ap_odd(const EllipticCurveCoeffs& c, std::uint64_t p) {
    static thread_local std::vector<signed char> chi;
    chi.assign(p, -1);
    chi[0] = 0;
    std::uint64_t s = 0;
    for (std::uint64_t y = 1; y <= (p - 1) / 2; ++y) {
        s += 2 * y - 1;
        if (s >= p) s -= p;
        chi[s] = 1;
    }

    auto modp = [&](int128 v) -> std::uint64_t {
        int128 r = v % static_cast<int128>(p);
        if (r < 0) r += p;
        return static_cast<std::uint64_t>(r);
    };
    const int128 b2 = int128(c.a1) * c.a1 + 4 * int128(c.a2);
    const int128 b4 = 2 * int128(c.a4) + int128(c.a1) * c.a3;
    const int128 b6 = int128(c.a3) * c.a3 + 4 * int128(c.a6);
    // g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6: forward differences at x = 0.
    std::uint64_t g = modp(b6);
    std::uint64_t d1 = modp(4 + b2 + 2 * b4);
    std::uint64_t d2 = modp(24 + 2 * b2);
    const std::uint64_t d3 = modp(24);

    long long acc = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        acc += chi[g];
        g += d1;
        if (g >= p) g -= p;
        d1 += d2;
        if (d1 >= p) d1 -= p;
        d2 += d3;
        if (d2 >= p) d2 -= p;
    }
    return -acc;
}

}  // namespace

long long ec_ap(const EllipticCurveCoeffs& curve, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("ec_ap: p must be prime");
    const int128 disc = curve.discriminant();
    if (disc % static_cast<int128>(p) == 0)
        throw std::domain_error("ec_ap: bad reduction at p = " + std::to_string(p));
    long long ap = (p == 2) ? ec_ap_two(curve) : ec_ap_odd(curve, p);
    if (int128(ap) * ap > int128(4) * p)
        throw std::logic_error("ec_ap: Hasse bound violated, counting bug");
    return ap;
}

namespace {

double normalize(int128 a, std::uint64_t p, int weight) {
    const double scale = std::pow(double(p), 0.5 * (weight - 1));
    return static_cast<double>(a) / scale;
}

void check_deligne(const EigenvalueTable& t) {
    for (std::size_t i = 0; i < t.primes.size(); ++i)
        if (!(std::abs(t.lambda[i]) <= 2.0))
            throw std::runtime_error("Deligne bound violated at p = " +
                                     std::to_string(t.primes[i]) + " for " +
                                     t.spec.label);
}

EigenvalueTable table_from_pairs(const NewformSpec& spec,
                                 std::uint64_t prime_limit,
                                 std::vector<std::uint64_t> primes,
                                 std::vector<int128> ap) {
    EigenvalueTable t;
    t.spec = spec;
    t.prime_limit = prime_limit;
    t.primes = std::move(primes);
    t.ap = std::move(ap);
    t.lambda.resize(t.primes.size());
    for (std::size_t i = 0; i < t.primes.size(); ++i)
        t.lambda[i] = normalize(t.ap[i], t.primes[i], spec.weight);
    check_deligne(t);
    return t;
}

std::vector<std::pair<std::uint64_t, int128>> read_ap_csv(
    const std::string& path, std::string* label, int* weight,
    std::uint64_t* level) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    std::string header;
    std::getline(in, header);
    char lbl[128];
    long long w = 0, lvl = 0;
    if (std::sscanf(header.c_str(), "# label=%127s weight=%lld level=%lld", lbl,
                    &w, &lvl) != 3)
        throw std::runtime_error("bad table header in " + path);
    *label = lbl;
    *weight = static_cast<int>(w);
    *level = static_cast<std::uint64_t>(lvl);

    std::vector<std::pair<std::uint64_t, int128>> rows;
    std::string line;
    std::uint64_t prev = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("bad table row in " + path + ": " + line);
        std::uint64_t p = std::stoull(line.substr(0, comma));
        int128 a = int128_from_string(line.substr(comma + 1));
        if (p <= prev)
            throw std::runtime_error("table rows not ascending in " + path);
        prev = p;
        rows.emplace_back(p, a);
    }
    return rows;
}

}  // namespace

bool EigenvalueTable::has(std::uint64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

std::size_t EigenvalueTable::index_of(std::uint64_t p) const {
    auto it = std::lower_bound(primes.begin(), primes.end(), p);
    if (it == primes.end() || *it != p)
        throw std::out_of_range("prime not in eigenvalue table: " +
                                std::to_string(p));
    return static_cast<std::size_t>(it - primes.begin());
}

EigenvalueTable build_table(const NewformSpec& spec, std::uint64_t prime_limit) {
    spec.validate();
    if (prime_limit < 1)
        throw std::invalid_argument("build_table: prime_limit must be positive");
    if (prime_limit < 2)
        return table_from_pairs(spec, prime_limit, {}, {});

    PrimeSieve sieve(prime_limit);
    std::vector<std::uint64_t> good;
    for (std::uint64_t p : sieve.primes())
        if (spec.level % p != 0) good.push_back(p);

    std::vector<int128> ap(good.size());
    switch (spec.source) {
        case NewformSource::EtaProductDelta: {
            if (prime_limit > kDeltaTableBound)
                throw std::runtime_error(
                    "tau table source exhausted: prime_limit " +
                    std::to_string(prime_limit) + " exceeds table bound " +
                    std::to_string(kDeltaTableBound));
            QSeries delta = eta_power_24_delta(prime_limit);
            for (std::size_t i = 0; i < good.size(); ++i)
                ap[i] = delta.coeff(good[i]);
            break;
        }
        case NewformSource::EllipticCurve: {
            const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(good.size());
            std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 16)
            for (std::ptrdiff_t i = 0; i < n; ++i) {
                try {
                    ap[i] = ec_ap(spec.curve, good[i]);
                } catch (...) {
#pragma omp critical
                    if (!err) err = std::current_exception();
                }
            }
            if (err) std::rethrow_exception(err);
            break;
        }
        case NewformSource::ExplicitTable: {
            std::string label;
            int weight;
            std::uint64_t level;
            auto rows = read_ap_csv(spec.table_path, &label, &weight, &level);
            std::size_t j = 0;
            for (std::size_t i = 0; i < good.size(); ++i) {
                while (j < rows.size() && rows[j].first < good[i]) ++j;
                if (j == rows.size() || rows[j].first != good[i])
                    throw std::runtime_error(
                        "explicit table source exhausted: missing p = " +
                        std::to_string(good[i]) + " in " + spec.table_path);
                ap[i] = rows[j].second;
            }
            break;
        }
    }
    return table_from_pairs(spec, prime_limit, std::move(good), std::move(ap));
}

void save_table(const EigenvalueTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write table file: " + path);
    out << "# label=" << table.spec.label << " weight=" << table.spec.weight
        << " level=" << table.spec.level << "\n";
    for (std::size_t i = 0; i < table.primes.size(); ++i)
        out << table.primes[i] << "," << to_string(table.ap[i]) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

EigenvalueTable load_table(const std::string& path) {
    std::string label;
    int weight;
    std::uint64_t level;
    auto rows = read_ap_csv(path, &label, &weight, &level);

    NewformSpec spec;
    spec.label = label;
    spec.weight = weight;
    spec.level = level;
    spec.source = NewformSource::ExplicitTable;
    spec.table_path = path;
    spec.validate();

    std::vector<std::uint64_t> primes;
    std::vector<int128> ap;
    primes.reserve(rows.size());
    ap.reserve(rows.size());
    std::uint64_t max_p = 2;
    for (const auto& [p, a] : rows) {
        primes.push_back(p);
        ap.push_back(a);
        max_p = p;
    }
    // Reject non-prime or ramified indices, and gaps in the coverage.
    PrimeSieve sieve(std::max<std::uint64_t>(max_p, 2));
    for (std::uint64_t p : primes) {
        if (!sieve.is_prime(p))
            throw std::runtime_error("non-prime index in " + path + ": " +
                                     std::to_string(p));
        if (level % p == 0)
            throw std::runtime_error("ramified prime in " + path + ": " +
                                     std::to_string(p));
    }
    if (!primes.empty()) {
        for (std::uint64_t p : sieve.primes()) {
            if (p > max_p) break;
            if (level % p != 0 &&
                !std::binary_search(primes.begin(), primes.end(), p))
                throw std::runtime_error("gap in table file " + path +
                                         ": missing p = " + std::to_string(p));
        }
    }
    return table_from_pairs(spec, max_p, std::move(primes), std::move(ap));
}

EigenvalueTable cached_table(const NewformSpec& spec, std::uint64_t prime_limit,
                             const std::string& cache_dir) {
    if (cache_dir.empty()) return build_table(spec, prime_limit);
    namespace fs = std::filesystem;
    fs::create_directories(cache_dir);
    const std::string path = (fs::path(cache_dir) /
                              (spec.label + "_" + std::to_string(prime_limit) +
                               ".csv"))
                                 .string();
    if (fs::exists(path)) {
        EigenvalueTable t = load_table(path);
        if (t.spec.label != spec.label || t.spec.weight != spec.weight ||
            t.spec.level != spec.level)
            throw std::runtime_error("cache file does not match spec: " + path);
        t.spec = spec;
        t.prime_limit = prime_limit;
        return t;
    }
    EigenvalueTable t = build_table(spec, prime_limit);
    save_table(t, path);
    return t;
}

double lambda_power_recurrence(double lambda_p, unsigned nu) {
    double prev = 1.0;  // lambda(p^0)
    if (nu == 0) return prev;
    double cur = lambda_p;
    for (unsigned v = 1; v < nu; ++v) {
        double next = lambda_p * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double lambda_power_trig(double theta_p, unsigned nu) {
    const double s = std::sin(theta_p);
    if (s == 0.0) {
        const double sign = (std::cos(theta_p) >= 0.0) ? 1.0 : -1.0;
        return (nu % 2 == 0) ? double(nu + 1) : sign * double(nu + 1);
    }
    return std::sin((nu + 1) * theta_p) / s;
}

double lambda_prime_power(const EigenvalueTable& table, std::uint64_t p,
                          unsigned nu) {
    if (table.spec.level % p == 0)
        throw std::domain_error("lambda_prime_power: ramified prime p = " +
                                std::to_string(p));
    return lambda_power_recurrence(table.lambda_at(p), nu);
}

}  // namespace stsign
