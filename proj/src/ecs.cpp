#include "covsys/ecs.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "covsys/error.hpp"

namespace covsys {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidModulus: return "InvalidModulus";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::EmptySystem: return "EmptySystem";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::ScanLimitExceeded: return "ScanLimitExceeded";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::NotVanishing: return "NotVanishing";
        case ErrorCode::TooManyPrimeFactors: return "TooManyPrimeFactors";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorCode::TargetNotPresent: return "TargetNotPresent";
        case ErrorCode::CosetNotPresent: return "CosetNotPresent";
        case ErrorCode::NotExact: return "NotExact";
        case ErrorCode::AlreadyTrivial: return "AlreadyTrivial";
        case ErrorCode::NoEligibleMaximalModulus: return "NoEligibleMaximalModulus";
        case ErrorCode::WrongPrimeSupport: return "WrongPrimeSupport";
        case ErrorCode::EnumerationLimitExceeded: return "EnumerationLimitExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

ResidueClass::ResidueClass(i64 residue, i64 modulus) : modulus_(modulus) {
    if (modulus < 1)
        throw Error(ErrorCode::InvalidModulus, "modulus must be positive, got " +
                                                   std::to_string(modulus));
    residue_ = residue % modulus;
    if (residue_ < 0) residue_ += modulus;
}

bool ResidueClass::contains(i64 x) const {
    i64 r = x % modulus_;
    if (r < 0) r += modulus_;
    return r == residue_;
}

std::ostream& operator<<(std::ostream& os, const ResidueClass& c) {
    return os << c.residue() << "(" << c.modulus() << ")";
}

ResidueClass normalize(i64 residue, i64 modulus) { return ResidueClass(residue, modulus); }

Ecs::Ecs(std::vector<ResidueClass> classes) : classes_(std::move(classes)) {
    if (classes_.empty())
        throw Error(ErrorCode::EmptySystem, "a covering system has at least one class");
    std::sort(classes_.begin(), classes_.end());
}

bool Ecs::contains(const ResidueClass& c) const {
    return std::binary_search(classes_.begin(), classes_.end(), c);
}

std::vector<i64> Ecs::distinct_moduli() const {
    std::vector<i64> moduli;
    for (const auto& c : classes_) {
        if (moduli.empty() || moduli.back() != c.modulus()) moduli.push_back(c.modulus());
    }
    return moduli;
}

std::ostream& operator<<(std::ostream& os, const Ecs& ecs) {
    os << "{";
    bool first = true;
    for (const auto& c : ecs.classes()) {
        if (!first) os << ", ";
        os << c;
        first = false;
    }
    return os << "}";
}

FactoredInteger factorize(i64 n) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "factorize needs a positive integer");
    FactoredInteger out;
    out.value = n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            i64 e = 0;
            while (n % p == 0) {
                n /= p;
                e++;
            }
            out.factors.emplace_back(p, e);
        }
    }
    if (n > 1) out.factors.emplace_back(n, 1);
    return out;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) return false;
    }
    return true;
}

i64 count_distinct_prime_factors(i64 n) {
    i64 count = 0;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            count++;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) count++;
    return count;
}

namespace {

// lcm of the moduli if it fits in int64, otherwise nullopt.
std::optional<i64> lcm_i64(const std::vector<i64>& moduli) {
    i64 l = 1;
    for (i64 n : moduli) {
        i64 g = std::gcd(l, n);
        unsigned __int128 next = static_cast<unsigned __int128>(l / g) *
                                 static_cast<unsigned __int128>(n);
        if (next > static_cast<unsigned __int128>(INT64_MAX)) return std::nullopt;
        l = static_cast<i64>(next);
    }
    return l;
}

Nat lcm_nat(const std::vector<i64>& moduli) {
    Nat l(1);
    for (i64 n : moduli) {
        std::uint64_t un = static_cast<std::uint64_t>(n);
        std::uint64_t g = std::gcd(l.mod_u64(un), un);
        l = (l / Nat(g)) * Nat(un);
    }
    return l;
}

// Exact density sum 1/n over the classes. Uses a 128-bit fast path over the
// common denominator when the lcm fits, falling back to big rationals.
Rat density_of(const Ecs& system, const std::optional<i64>& small_lcm) {
    if (small_lcm) {
        i64 l = *small_lcm;
        unsigned __int128 num = 0;
        for (const auto& c : system.classes()) num += static_cast<std::uint64_t>(l / c.modulus());
        return Rat(Nat::from_u128(num), Nat(static_cast<std::uint64_t>(l)));
    }
    Rat density;
    for (const auto& c : system.classes())
        density += Rat(1, static_cast<std::uint64_t>(c.modulus()));
    return density;
}

void fill_modulus_stats(const Ecs& system, CoverReport& report) {
    const auto moduli = system.distinct_moduli();
    i64 greatest = moduli.back();
    report.greatest_modulus_count = 0;
    for (const auto& c : system.classes())
        if (c.modulus() == greatest) report.greatest_modulus_count++;
    for (i64 m : moduli) {
        bool divides_other = false;
        for (i64 other : moduli) {
            if (other != m && other % m == 0) {
                divides_other = true;
                break;
            }
        }
        if (!divides_other) report.maximal_moduli.push_back(m);
    }
}

} // namespace

CoverReport verify_scan(const Ecs& system, i64 scan_limit) {
    const auto moduli = system.distinct_moduli();
    auto small = lcm_i64(moduli);
    if (!small || *small > scan_limit)
        throw Error(ErrorCode::ScanLimitExceeded,
                    "period exceeds scan limit " + std::to_string(scan_limit) +
                        "; use verify_crt");
    i64 period = *small;

    CoverReport report;
    report.lcm = Nat(static_cast<std::uint64_t>(period));
    report.density = density_of(system, small);
    fill_modulus_stats(system, report);

    // Direct definition check: hit count of every residue in one period.
    for (i64 r = 0; r < period; r++) {
        i64 hits = 0;
        for (const auto& c : system.classes())
            if (r % c.modulus() == c.residue()) hits++;
        if (hits == 0) report.uncovered.push_back(r);
        if (hits >= 2) report.multiply_covered.push_back(r);
    }
    report.is_exact = report.uncovered.empty() && report.multiply_covered.empty();
    return report;
}

bool verify_crt(const Ecs& system) {
    const auto& classes = system.classes();
    // Two progressions meet iff their residues agree mod the gcd of moduli.
    for (std::size_t i = 0; i < classes.size(); i++) {
        for (std::size_t j = i + 1; j < classes.size(); j++) {
            i64 g = std::gcd(classes[i].modulus(), classes[j].modulus());
            if ((classes[i].residue() - classes[j].residue()) % g == 0) return false;
        }
    }
    const auto moduli = system.distinct_moduli();
    auto small = lcm_i64(moduli);
    if (small) {
        unsigned __int128 num = 0;
        for (const auto& c : classes) num += static_cast<std::uint64_t>(*small / c.modulus());
        return num == static_cast<unsigned __int128>(*small);
    }
    return density_of(system, std::nullopt).is_one();
}

bool verify_genfun(const Ecs& system, i64 scan_limit) {
    const auto moduli = system.distinct_moduli();
    auto small = lcm_i64(moduli);
    if (!small || *small > scan_limit)
        throw Error(ErrorCode::ScanLimitExceeded,
                    "period exceeds scan limit " + std::to_string(scan_limit) +
                        "; use verify_crt");
    i64 period = *small;

    // Left side: each z^a * (1-z^period)/(1-z^n) expands to the geometric sum
    // z^a + z^(a+n) + ... with period/n terms, all of degree < period.
    std::vector<i64> coeffs(static_cast<std::size_t>(period), 0);
    for (const auto& c : system.classes()) {
        for (i64 e = c.residue(); e < period; e += c.modulus())
            coeffs[static_cast<std::size_t>(e)]++;
    }
    // Right side: (1-z^period)/(1-z) = 1 + z + ... + z^(period-1).
    return std::all_of(coeffs.begin(), coeffs.end(), [](i64 v) { return v == 1; });
}

CoverReport stats(const Ecs& system) {
    CoverReport report;
    const auto moduli = system.distinct_moduli();
    auto small = lcm_i64(moduli);
    report.lcm = small ? Nat(static_cast<std::uint64_t>(*small)) : lcm_nat(moduli);
    report.density = density_of(system, small);
    fill_modulus_stats(system, report);
    return report;
}

} // namespace covsys
