#include <doctest.h>

#include <cstdint>

#include "covsys/bignum.hpp"
#include "covsys/error.hpp"
#include "covsys/reduction.hpp" // SplitMix64

using covsys::Nat;
using covsys::Rat;

TEST_CASE("Nat basics") {
    CHECK(Nat().is_zero());
    CHECK(Nat(0).is_zero());
    CHECK(Nat(1).to_u64() == 1);
    CHECK(Nat(UINT64_MAX).to_u64() == UINT64_MAX);
    CHECK(Nat(UINT64_MAX).to_string() == "18446744073709551615");
    CHECK(Nat::from_string("18446744073709551615") == Nat(UINT64_MAX));
    CHECK(Nat::from_string("0").is_zero());
    CHECK(Nat(7) < Nat(8));
    CHECK(Nat(1) + Nat(UINT64_MAX) > Nat(UINT64_MAX));
}

TEST_CASE("Nat arithmetic cross-checked against native 64-bit") {
    covsys::SplitMix64 rng(42);
    for (int i = 0; i < 2000; i++) {
        std::uint64_t a = rng.next() >> (rng.below(64));
        std::uint64_t b = rng.next() >> (rng.below(64));
        CHECK(Nat(a) + Nat(b) == Nat::from_u128(static_cast<unsigned __int128>(a) + b));
        unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
        CHECK(Nat(a) * Nat(b) == Nat::from_u128(prod));
        if (b != 0) {
            auto [q, r] = Nat::divmod(Nat(a), Nat(b));
            CHECK(q == Nat(a / b));
            CHECK(r == Nat(a % b));
            CHECK(Nat(a).mod_u64(b) == a % b);
        }
        if (a >= b) CHECK((Nat(a) - Nat(b)) == Nat(a - b));
    }
}

TEST_CASE("Nat frozen large values") {
    // product of all primes up to 97
    Nat primorial(1);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                            47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97})
        primorial = primorial * Nat(p);
    CHECK(primorial.to_string() == "2305567963945518424753102147331756070");

    Nat factorial(1);
    for (std::uint64_t k = 2; k <= 30; k++) factorial = factorial * Nat(k);
    CHECK(factorial.to_string() == "265252859812191058636308480000000");

    Nat two_pow_100 = Nat(1);
    for (int i = 0; i < 100; i++) two_pow_100 = two_pow_100 * Nat(2);
    CHECK(two_pow_100.to_string() == "1267650600228229401496703205376");

    Nat a = Nat::from_string("1267650600228229401496703205379"); // 2^100 + 3
    Nat b = Nat::from_string("147808829414345923316083210206383297608"); // 3^80 + 7
    CHECK((a * b).to_string() ==
          "187369951326127578972351341306692955212139574682473404856581703433432");
    auto [q, r] = Nat::divmod(a * b + Nat(12345), b);
    CHECK(q == a);
    CHECK(r == Nat(12345));
}

TEST_CASE("Nat divmod round-trips on random wide operands") {
    covsys::SplitMix64 rng(7);
    for (int i = 0; i < 300; i++) {
        Nat a(1);
        int limbs = 1 + static_cast<int>(rng.below(6));
        for (int j = 0; j < limbs; j++) a = a * Nat(rng.next() | 1);
        Nat d(1);
        int dlimbs = 1 + static_cast<int>(rng.below(4));
        for (int j = 0; j < dlimbs; j++) d = d * Nat(rng.next() | 1);
        auto [q, rem] = Nat::divmod(a, d);
        CHECK(q * d + rem == a);
        CHECK(rem < d);
    }
}

TEST_CASE("Nat gcd and lcm") {
    CHECK(Nat::gcd(Nat(12), Nat(18)) == Nat(6));
    CHECK(Nat::gcd(Nat(0), Nat(5)) == Nat(5));
    CHECK(Nat::lcm(Nat(4), Nat(6)) == Nat(12));
    // gcd(12! * (2^64-1), 18! * (2^32+1)) computed independently
    Nat f12(1), f18(1);
    for (std::uint64_t k = 2; k <= 12; k++) f12 = f12 * Nat(k);
    for (std::uint64_t k = 2; k <= 18; k++) f18 = f18 * Nat(k);
    Nat x = f12 * Nat(UINT64_MAX);
    Nat y = f18 * Nat(4294967297ull);
    CHECK(Nat::gcd(x, y).to_string() == "524610532838722176000");
}

TEST_CASE("Nat error cases") {
    CHECK_THROWS_AS(Nat::divmod(Nat(1), Nat(0)), covsys::Error);
    CHECK_THROWS_AS(Nat(3) -= Nat(5), covsys::Error);
    CHECK_THROWS_AS(Nat::from_string("12a"), covsys::Error);
    CHECK_THROWS_AS(Nat::from_string(""), covsys::Error);
}

TEST_CASE("Rat reduces and compares") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(6, 3).to_string() == "2");
    CHECK(Rat(1, 3).to_string() == "1/3");
    CHECK(Rat(0, 7) == Rat());
    CHECK_THROWS_AS(Rat(1, 0), covsys::Error);
}

TEST_CASE("Rat addition is exact") {
    Rat half(1, 2), third(1, 3), sixth(1, 6);
    CHECK(half + third + sixth == Rat(1));
    CHECK((half + third + sixth).is_one());

    // 1/2 + 1/3 + 1/12 + ... of the 13-class fixture checked elsewhere;
    // here: sum over many denominators stays in lowest terms.
    Rat sum;
    for (std::uint64_t n = 1; n <= 50; n++) sum += Rat(1, n);
    // harmonic H_50 = p/q with frozen value
    CHECK(sum.to_string() ==
          "13943237577224054960759/3099044504245996706400");
}

TEST_CASE("Rat handles denominators past 64 bits") {
    Rat tiny(Nat(1), Nat::from_string("340282366920938463463374607431768211456")); // 2^128
    Rat sum = tiny + tiny;
    CHECK(sum == Rat(Nat(1), Nat::from_string("170141183460469231731687303715884105728")));
}
