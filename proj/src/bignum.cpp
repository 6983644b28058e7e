#include "covsys/bignum.hpp"

#include <algorithm>
#include <cstddef>

#include "covsys/error.hpp"

namespace covsys {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
} // namespace

Nat::Nat(std::uint64_t value) {
    if (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
    }
}

Nat Nat::from_u128(unsigned __int128 value) {
    Nat out;
    while (value != 0) {
        out.limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
        value >>= 32;
    }
    return out;
}

Nat Nat::from_string(std::string_view decimal) {
    if (decimal.empty())
        throw Error(ErrorCode::InvalidArgument, "empty decimal string");
    Nat out;
    for (char c : decimal) {
        if (c < '0' || c > '9')
            throw Error(ErrorCode::InvalidArgument, "non-digit in decimal string");
        // out = out * 10 + digit
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : out.limbs_) {
            std::uint64_t v = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(v & 0xffffffffu);
            carry = v >> 32;
        }
        while (carry) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    return out;
}

std::uint64_t Nat::to_u64() const {
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::size_t Nat::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        bits++;
        top >>= 1;
    }
    return bits;
}

void Nat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

Nat& Nat::operator+=(const Nat& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); i++) {
        std::uint64_t v = carry + limbs_[i];
        if (i < rhs.limbs_.size()) v += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(v & 0xffffffffu);
        carry = v >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

Nat& Nat::operator-=(const Nat& rhs) {
    if (*this < rhs)
        throw Error(ErrorCode::InvalidArgument, "natural subtraction would go negative");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); i++) {
        std::int64_t v = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < rhs.limbs_.size() ? static_cast<std::int64_t>(rhs.limbs_[i]) : 0);
        if (v < 0) {
            v += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<std::uint32_t>(v);
    }
    trim();
    return *this;
}

Nat operator*(const Nat& a, const Nat& b) {
    Nat out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); i++) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); j++) {
            std::uint64_t v = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                              out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(v & 0xffffffffu);
            carry = v >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t v = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(v & 0xffffffffu);
            carry = v >> 32;
            k++;
        }
    }
    out.trim();
    return out;
}

Nat& Nat::shift_left_bits(std::size_t bits) {
    if (is_zero() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32;
    std::size_t bit_shift = bits % 32;
    std::size_t old_size = limbs_.size();
    limbs_.resize(old_size + limb_shift + 1, 0);
    for (std::size_t i = old_size; i-- > 0;) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
        limbs_[i + limb_shift] = static_cast<std::uint32_t>(v & 0xffffffffu);
    }
    for (std::size_t i = 0; i < limb_shift; i++) limbs_[i] = 0;
    trim();
    return *this;
}

std::pair<Nat, Nat> Nat::divmod(const Nat& num, const Nat& den) {
    if (den.is_zero())
        throw Error(ErrorCode::InvalidArgument, "division by zero");
    if (num < den) return {Nat(), num};

    // Single-limb divisor: limb-wise short division.
    if (den.limbs_.size() == 1) {
        std::uint64_t d = den.limbs_[0];
        Nat q;
        q.limbs_.assign(num.limbs_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = num.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | num.limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        return {q, Nat(rem)};
    }

    // Bit-by-bit long division: simple and exact; operands stay desk-scale.
    std::size_t shift = num.bit_length() - den.bit_length();
    Nat shifted = den;
    shifted.shift_left_bits(shift);
    Nat rem = num;
    Nat q;
    q.limbs_.assign((shift / 32) + 1, 0);
    for (std::size_t i = shift + 1; i-- > 0;) {
        if (rem >= shifted) {
            rem -= shifted;
            q.limbs_[i / 32] |= (1u << (i % 32));
        }
        // shift divisor right one bit
        std::uint32_t carry = 0;
        for (std::size_t j = shifted.limbs_.size(); j-- > 0;) {
            std::uint32_t next = shifted.limbs_[j] & 1u;
            shifted.limbs_[j] = (shifted.limbs_[j] >> 1) | (carry << 31);
            carry = next;
        }
        shifted.trim();
    }
    q.trim();
    return {q, rem};
}

std::uint64_t Nat::mod_u64(std::uint64_t d) const {
    if (d == 0)
        throw Error(ErrorCode::InvalidArgument, "division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 32) | limbs_[i]) % d;
    }
    return static_cast<std::uint64_t>(rem);
}

Nat Nat::gcd(Nat a, Nat b) {
    while (!b.is_zero()) {
        Nat r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Nat Nat::lcm(const Nat& a, const Nat& b) {
    if (a.is_zero() || b.is_zero()) return Nat();
    return (a / gcd(a, b)) * b;
}

std::string Nat::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> chunks; // base 10^9, little endian
    Nat cur = *this;
    const Nat billion(1000000000u);
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, billion);
        chunks.push_back(static_cast<std::uint32_t>(r.is_zero() ? 0 : r.to_u64()));
        cur = std::move(q);
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

Rat::Rat(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den == 0)
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    reduce();
}

Rat::Rat(Nat num, Nat den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    reduce();
}

void Rat::reduce() {
    if (num_.is_zero()) {
        den_ = Nat(1);
        return;
    }
    Nat g = Nat::gcd(num_, den_);
    if (g > Nat(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat& Rat::operator+=(const Rat& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    reduce();
    return *this;
}

std::string Rat::to_string() const {
    if (den_ == Nat(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace covsys
