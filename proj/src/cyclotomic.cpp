#include "covsys/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>

#include "covsys/ecs.hpp"
#include "covsys/error.hpp"

namespace covsys {

namespace {

using Poly = std::vector<i64>; // dense, constant term first, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of num modulo a monic divisor, over Z.
Poly poly_mod_monic(Poly num, const Poly& den) {
    trim(num);
    while (num.size() >= den.size()) {
        i64 lead = num.back();
        std::size_t offset = num.size() - den.size();
        if (lead != 0) {
            for (std::size_t i = 0; i < den.size(); i++) num[offset + i] -= lead * den[i];
        }
        num.pop_back();
        trim(num);
    }
    return num;
}

// Exact quotient num / den for monic den; the division must leave no remainder.
Poly poly_div_exact_monic(Poly num, const Poly& den) {
    trim(num);
    if (num.empty()) return num;
    if (num.size() < den.size())
        throw Error(ErrorCode::InvalidArgument, "polynomial division left a remainder");
    Poly quot(num.size() - den.size() + 1, 0);
    while (num.size() >= den.size()) {
        i64 lead = num.back();
        std::size_t offset = num.size() - den.size();
        quot[offset] = lead;
        if (lead != 0) {
            for (std::size_t i = 0; i < den.size(); i++) num[offset + i] -= lead * den[i];
        }
        num.pop_back();
        trim(num);
    }
    if (!num.empty())
        throw Error(ErrorCode::InvalidArgument, "polynomial division left a remainder");
    return quot;
}

Poly x_power_minus_one(i64 m) {
    Poly p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    return p;
}

const Poly& cyclotomic_memoized(i64 m, std::map<i64, Poly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Poly f = x_power_minus_one(m);
    for (i64 d = 1; d < m; d++) {
        if (m % d == 0) f = poly_div_exact_monic(std::move(f), cyclotomic_memoized(d, cache));
    }
    return cache.emplace(m, std::move(f)).first->second;
}

void check_vector(const CycVector& v) {
    if (v.modulus < 1)
        throw Error(ErrorCode::InvalidArgument, "group order must be positive");
    if (static_cast<i64>(v.coeffs.size()) != v.modulus)
        throw Error(ErrorCode::InvalidArgument, "coefficient vector length must equal the order");
}

} // namespace

bool CycVector::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](i64 c) { return c == 0; });
}

std::ostream& operator<<(std::ostream& os, const CycVector& v) {
    os << "[mod " << v.modulus << ":";
    for (i64 c : v.coeffs) os << " " << c;
    return os << "]";
}

std::ostream& operator<<(std::ostream& os, const CosetTerm& c) {
    return os << "(m=" << c.modulus << ", p=" << c.prime << ", d=" << c.shift << ")";
}

CycVector from_exponents(i64 m, const std::vector<i64>& exponents) {
    if (m < 1)
        throw Error(ErrorCode::InvalidArgument, "group order must be positive");
    CycVector v;
    v.modulus = m;
    v.coeffs.assign(static_cast<std::size_t>(m), 0);
    for (i64 e : exponents) {
        i64 r = e % m;
        if (r < 0) r += m;
        v.coeffs[static_cast<std::size_t>(r)]++;
    }
    return v;
}

std::vector<i64> cyclotomic_polynomial(i64 m) {
    if (m < 1)
        throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
    static std::map<i64, Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return cyclotomic_memoized(m, cache);
}

bool vanishes(const CycVector& v) {
    check_vector(v);
    Poly rem = poly_mod_monic(v.coeffs, cyclotomic_polynomial(v.modulus));
    return rem.empty();
}

i64 geometric_sum_image(i64 big_period, i64 t, i64 order) {
    if (t < 1 || order < 1 || big_period < 1 || big_period % t != 0)
        throw Error(ErrorCode::NotADivisor, "step must divide the period");
    if (big_period % order != 0)
        throw Error(ErrorCode::NotADivisor, "root order must divide the period");
    i64 terms = big_period / t;
    if (t % order == 0) return terms; // every summand evaluates to 1
    // Otherwise the summands fill cosets and the image is zero; confirm exactly.
    std::vector<i64> exps(static_cast<std::size_t>(terms));
    for (i64 i = 0; i < terms; i++) exps[static_cast<std::size_t>(i)] = i * t % order;
    if (!vanishes(from_exponents(order, exps)))
        throw Error(ErrorCode::InvalidArgument, "geometric sum image is not an integer");
    return 0;
}

CycVector coset_vector(const CosetTerm& c) {
    if (c.modulus < 2 || !is_prime(c.prime) || c.modulus % c.prime != 0)
        throw Error(ErrorCode::InvalidArgument, "coset prime must divide the order");
    i64 step = c.modulus / c.prime;
    if (c.shift < 0 || c.shift >= step)
        throw Error(ErrorCode::InvalidArgument, "coset shift out of range");
    CycVector v;
    v.modulus = c.modulus;
    v.coeffs.assign(static_cast<std::size_t>(c.modulus), 0);
    for (i64 j = 0; j < c.prime; j++)
        v.coeffs[static_cast<std::size_t>(c.shift + j * step)] = 1;
    return v;
}

CosetTerm find_coset(const CycVector& v) {
    check_vector(v);
    if (v.is_zero())
        throw Error(ErrorCode::ZeroVector, "no coset inside the zero vector");
    for (i64 c : v.coeffs)
        if (c < 0)
            throw Error(ErrorCode::NegativeCoefficient,
                        "coset search needs non-negative coefficients");
    auto factors = factorize(v.modulus).factors;
    if (factors.size() > 2)
        throw Error(ErrorCode::TooManyPrimeFactors,
                    "order " + std::to_string(v.modulus) +
                        " has more than two distinct prime factors");
    if (!vanishes(v))
        throw Error(ErrorCode::NotVanishing, "vector does not vanish at a primitive root");

    for (const auto& [p, exp] : factors) {
        i64 step = v.modulus / p;
        for (i64 d = 0; d < step; d++) {
            bool full = true;
            for (i64 j = 0; j < p && full; j++)
                full = v.coeffs[static_cast<std::size_t>(d + j * step)] >= 1;
            if (full) return CosetTerm{v.modulus, p, d};
        }
    }
    // Unreachable for valid inputs: a nonzero non-negative vanishing vector
    // over an order with at most two prime factors always contains a coset.
    throw Error(ErrorCode::NotVanishing, "no coset found in a vanishing vector");
}

std::vector<CosetTerm> decompose(const CycVector& v) {
    check_vector(v);
    std::vector<CosetTerm> terms;
    CycVector rest = v;
    while (!rest.is_zero()) {
        CosetTerm term = find_coset(rest);
        i64 step = term.modulus / term.prime;
        for (i64 j = 0; j < term.prime; j++)
            rest.coeffs[static_cast<std::size_t>(term.shift + j * step)]--;
        terms.push_back(term);
    }
    return terms;
}

} // namespace covsys
