#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covsys {

/// Arbitrary-precision natural number (non-negative integer).
/// Stored as base-2^32 limbs, least significant first, no trailing zero limbs.
class Nat {
public:
    Nat() = default; // zero
    Nat(std::uint64_t value);
    static Nat from_u128(unsigned __int128 value);
    static Nat from_string(std::string_view decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const; // pre: fits_u64()
    std::size_t bit_length() const;
    std::string to_string() const;

    friend bool operator==(const Nat& a, const Nat& b) { return a.limbs_ == b.limbs_; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b);

    Nat& operator+=(const Nat& rhs);
    Nat& operator-=(const Nat& rhs); // pre: *this >= rhs
    friend Nat operator+(Nat a, const Nat& b) { return a += b; }
    friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
    friend Nat operator*(const Nat& a, const Nat& b);

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Nat, Nat> divmod(const Nat& num, const Nat& den);
    friend Nat operator/(const Nat& a, const Nat& b) { return divmod(a, b).first; }
    friend Nat operator%(const Nat& a, const Nat& b) { return divmod(a, b).second; }

    std::uint64_t mod_u64(std::uint64_t d) const; // pre: d != 0

    static Nat gcd(Nat a, Nat b);
    static Nat lcm(const Nat& a, const Nat& b);

private:
    void trim();
    Nat& shift_left_bits(std::size_t bits);
    std::vector<std::uint32_t> limbs_;
};

/// Exact non-negative rational, always in lowest terms, denominator >= 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(std::uint64_t value) : num_(value), den_(1) {}
    Rat(std::uint64_t num, std::uint64_t den);
    Rat(Nat num, Nat den); // den must be nonzero

    const Nat& num() const { return num_; }
    const Nat& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    std::string to_string() const; // "p/q", or "p" when q == 1

    Rat& operator+=(const Rat& rhs);
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void reduce();
    Nat num_;
    Nat den_;
};

} // namespace covsys
