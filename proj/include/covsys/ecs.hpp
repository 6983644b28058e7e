#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "covsys/bignum.hpp"

namespace covsys {

using i64 = std::int64_t;

/// One arithmetic progression a + nZ in normalized form (0 <= a < n).
/// The constructor reduces any integer residue into range.
class ResidueClass {
public:
    ResidueClass(i64 residue, i64 modulus); // throws InvalidModulus for modulus < 1

    i64 residue() const { return residue_; }
    i64 modulus() const { return modulus_; }
    bool contains(i64 x) const;

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
    // Canonical order: by modulus, then residue.
    friend std::strong_ordering operator<=>(const ResidueClass& a, const ResidueClass& b) {
        if (a.modulus_ != b.modulus_) return a.modulus_ <=> b.modulus_;
        return a.residue_ <=> b.residue_;
    }

private:
    i64 residue_;
    i64 modulus_;
};

std::ostream& operator<<(std::ostream& os, const ResidueClass& c);

/// Reduce a raw (residue, modulus) pair into normalized form.
ResidueClass normalize(i64 residue, i64 modulus);

/// A finite multiset of residue classes, kept sorted in canonical order.
/// Duplicate classes are allowed; equality is multiset equality.
class Ecs {
public:
    explicit Ecs(std::vector<ResidueClass> classes); // throws EmptySystem
    static Ecs trivial() { return Ecs({ResidueClass(0, 1)}); }

    const std::vector<ResidueClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }
    bool is_trivial() const { return classes_.size() == 1 && classes_[0].modulus() == 1; }
    bool contains(const ResidueClass& c) const;
    std::vector<i64> distinct_moduli() const; // ascending

    friend bool operator==(const Ecs&, const Ecs&) = default;
    friend std::strong_ordering operator<=>(const Ecs&, const Ecs&) = default;

private:
    std::vector<ResidueClass> classes_;
};

std::ostream& operator<<(std::ostream& os, const Ecs& ecs);

/// Canonical factorization of a positive integer; factors ascending by prime.
struct FactoredInteger {
    i64 value = 1;
    std::vector<std::pair<i64, i64>> factors; // (prime, exponent), exponent >= 1
};

FactoredInteger factorize(i64 n); // trial division; n >= 1
bool is_prime(i64 n);
i64 count_distinct_prime_factors(i64 n);

/// Coverage summary for a system.
/// `is_exact` is set only by verify_scan; stats() leaves it empty.
struct CoverReport {
    std::optional<bool> is_exact;
    Nat lcm;                            // N(A), least common multiple of the moduli
    Rat density;                        // sum of 1/n over all classes
    std::vector<i64> uncovered;         // residues mod N hit by no class (scan only)
    std::vector<i64> multiply_covered;  // residues mod N hit by >= 2 classes (scan only)
    i64 greatest_modulus_count = 0;     // classes whose modulus is the numeric maximum
    std::vector<i64> maximal_moduli;    // moduli maximal under divisibility, ascending
};

inline constexpr i64 kDefaultScanLimit = 1000000;

/// Definition check over one full period: counts, for every residue r in
/// [0, N), how many classes contain r. Throws ScanLimitExceeded when N(A)
/// exceeds `scan_limit` (use verify_crt instead in that case).
CoverReport verify_scan(const Ecs& system, i64 scan_limit = kDefaultScanLimit);

/// Exactness via pairwise disjointness (two classes meet iff their residues
/// agree modulo the gcd of their moduli) plus exact density 1. Needs no
/// period scan, so it has no size limit.
bool verify_crt(const Ecs& system);

/// Exactness as a polynomial identity: sum of z^a * (1-z^N)/(1-z^n) over the
/// classes must equal (1-z^N)/(1-z), each quotient expanded as a geometric
/// sum and compared coefficient-wise over exact integers.
bool verify_genfun(const Ecs& system, i64 scan_limit = kDefaultScanLimit);

/// Aggregate fields only (lcm, density, modulus statistics); no covering scan.
CoverReport stats(const Ecs& system);

} // namespace covsys
