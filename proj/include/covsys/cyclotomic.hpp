#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace covsys {

using i64 = std::int64_t;

/// Element of the group ring Z[C_m]: coeffs[i] is the coefficient of z^i,
/// indices mod m. Vanishing means the image under evaluation at a primitive
/// m-th root of unity is zero.
struct CycVector {
    i64 modulus = 1;
    std::vector<i64> coeffs; // length == modulus

    bool is_zero() const;
};

std::ostream& operator<<(std::ostream& os, const CycVector& v);

/// A translate z^d * (sum over the order-p subgroup of C_m): ones at the
/// positions d + j*(m/p) for j in [0, p). Always vanishes.
struct CosetTerm {
    i64 modulus = 1; // m
    i64 prime = 2;   // p, a prime divisor of m
    i64 shift = 0;   // d, 0 <= d < m/p

    friend bool operator==(const CosetTerm&, const CosetTerm&) = default;
};

std::ostream& operator<<(std::ostream& os, const CosetTerm& c);

/// Multiset of exponents (reduced mod m) to coefficient vector.
CycVector from_exponents(i64 m, const std::vector<i64>& exponents);

/// Exact integer coefficients of the m-th cyclotomic polynomial, constant
/// term first. Computed by dividing x^m - 1 by the cyclotomic polynomials of
/// all proper divisors of m; memoized per process (thread-safe).
std::vector<i64> cyclotomic_polynomial(i64 m);

/// True iff the polynomial with v's coefficients is divisible by the m-th
/// cyclotomic polynomial, i.e. v evaluates to zero at a primitive m-th root
/// of unity. Exact integer arithmetic throughout.
bool vanishes(const CycVector& v);

/// Image of the geometric sum (1 - z^N)/(1 - z^t) = 1 + z^t + ... under
/// evaluation at a primitive `order`-th root of unity, as an exact integer:
/// N/t when `order` divides t, and 0 otherwise (the image always vanishes in
/// that case). Requires t | N and order | N.
i64 geometric_sum_image(i64 big_period, i64 t, i64 order);

CycVector coset_vector(const CosetTerm& c);

/// Find a prime-order coset whose translate is dominated pointwise by v.
/// Requires: v nonzero, non-negative, vanishing, and m > 1 with at most two
/// distinct prime factors — under those conditions a coset always exists.
/// Deterministic tie-break: smallest prime, then smallest shift.
CosetTerm find_coset(const CycVector& v);

/// Peel cosets off v until nothing is left; the returned terms sum to v.
/// Same preconditions as find_coset, except the zero vector is allowed
/// (and yields an empty list).
std::vector<CosetTerm> decompose(const CycVector& v);

} // namespace covsys
