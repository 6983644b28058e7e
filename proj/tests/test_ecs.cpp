#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "covsys/ecs.hpp"
#include "covsys/error.hpp"
#include "covsys/reduction.hpp"

#include "helpers.hpp"

using namespace covsys;
using covsys_test::irreducible13;
using covsys_test::mk;

TEST_CASE("normalize reduces residues into range") {
    CHECK(normalize(7, 4) == ResidueClass(3, 4));
    CHECK(normalize(0, 1) == ResidueClass(0, 1));
    CHECK(normalize(-1, 5) == ResidueClass(4, 5));
    CHECK(normalize(-13, 5) == ResidueClass(2, 5));
    CHECK_THROWS_AS(normalize(3, 0), Error);
    CHECK_THROWS_AS(normalize(3, -2), Error);
}

TEST_CASE("normalize is idempotent") {
    for (i64 n = 1; n <= 40; n++) {
        for (i64 a = -90; a <= 90; a += 7) {
            ResidueClass once = normalize(a, n);
            CHECK(normalize(once.residue(), once.modulus()) == once);
        }
    }
}

TEST_CASE("residue class membership") {
    ResidueClass c(3, 10);
    CHECK(c.contains(3));
    CHECK(c.contains(13));
    CHECK(c.contains(-7));
    CHECK_FALSE(c.contains(4));
}

TEST_CASE("Ecs equality ignores input order and keeps duplicates") {
    Ecs a = mk({{0, 2}, {1, 4}, {3, 4}});
    Ecs b = mk({{3, 4}, {0, 2}, {1, 4}});
    CHECK(a == b);
    CHECK(mk({{0, 2}, {0, 2}}) != mk({{0, 2}}));
    CHECK_THROWS_AS(Ecs({}), Error);
}

TEST_CASE("verify_scan on the trivial system") {
    CoverReport report = verify_scan(Ecs::trivial());
    CHECK(report.is_exact == true);
    CHECK(report.lcm == Nat(1));
    CHECK(report.density.is_one());
}

TEST_CASE("verify_scan on the 13-class fixture") {
    CoverReport report = verify_scan(irreducible13());
    CHECK(report.is_exact == true);
    CHECK(report.lcm == Nat(30));
    CHECK(report.density.is_one());
    CHECK(report.greatest_modulus_count == 6);
    CHECK(report.maximal_moduli == std::vector<i64>{30});
}

TEST_CASE("verify_scan reports gaps") {
    CoverReport report = verify_scan(mk({{0, 2}, {1, 4}}));
    CHECK(report.is_exact == false);
    CHECK(std::find(report.uncovered.begin(), report.uncovered.end(), 3) !=
          report.uncovered.end());
    CHECK_FALSE(report.density.is_one());
}

TEST_CASE("verify_scan enforces the scan limit") {
    Ecs wide = mk({{0, 999983}, {1, 999979}});
    CHECK_THROWS_AS(verify_scan(wide, 1000000), Error);
    CHECK_FALSE(verify_crt(wide)); // the unlimited fallback still answers
}

TEST_CASE("verify_crt worked examples") {
    CHECK_FALSE(verify_crt(mk({{0, 2}, {0, 3}})));          // coprime moduli intersect
    CHECK(verify_crt(mk({{0, 2}, {1, 4}, {3, 4}})));
    CHECK_FALSE(verify_crt(mk({{0, 2}, {1, 2}, {1, 2}})));  // duplicate overlaps itself
}

TEST_CASE("verify_genfun worked examples") {
    CHECK(verify_genfun(mk({{0, 2}, {1, 2}})));
    CHECK(verify_genfun(irreducible13()));
    CHECK_FALSE(verify_genfun(mk({{0, 2}, {1, 4}})));
}

TEST_CASE("stats aggregates without scanning") {
    CoverReport report = stats(irreducible13());
    CHECK_FALSE(report.is_exact.has_value());
    CHECK(report.lcm == Nat(30));
    CHECK(report.density.is_one()); // 2/6 + 4/10 + 1/15 + 6/30
    CHECK(report.greatest_modulus_count == 6);
    CHECK(report.maximal_moduli == std::vector<i64>{30});

    CoverReport small = stats(mk({{0, 2}, {1, 4}, {3, 4}}));
    CHECK(small.maximal_moduli == std::vector<i64>{4});
    CHECK(small.density.is_one());
    CHECK(small.greatest_modulus_count == 2);
}

TEST_CASE("stats handles periods past 64 bits exactly") {
    // moduli: the first 16 primes squared; lcm overflows int64
    std::vector<ResidueClass> classes;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53})
        classes.emplace_back(0, p * p);
    CoverReport report = stats(Ecs(std::move(classes)));
    // product of p^2 = (97-primorial without primes > 53)^2: frozen via string
    Nat expected(1);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53})
        expected = expected * Nat(p * p);
    CHECK(report.lcm == expected);
    CHECK_FALSE(report.density.is_one());
}

TEST_CASE("verify_crt answers exactly when the period passes 64 bits") {
    // pairwise gcd 6 keeps the classes disjoint; the lcm of the moduli is
    // 6 * p1 * p2 * p3 which does not fit in 64 bits
    Ecs sparse = mk({{1, 6 * 10000019}, {3, 6 * 10000079}, {5, 6 * 10000103}});
    CHECK_FALSE(verify_crt(sparse)); // disjoint but density far below one
    CHECK_FALSE(stats(sparse).density.is_one());
}

TEST_CASE("density one does not imply exact") {
    Ecs overlap = mk({{0, 2}, {0, 2}});
    CHECK(stats(overlap).density.is_one());
    CHECK_FALSE(verify_crt(overlap));
    CHECK(verify_scan(overlap).is_exact == false);
}

TEST_CASE("factorize worked examples") {
    CHECK(factorize(30).factors ==
          std::vector<std::pair<i64, i64>>{{2, 1}, {3, 1}, {5, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(12).factors == std::vector<std::pair<i64, i64>>{{2, 2}, {3, 1}});
    CHECK(factorize(9973).factors == std::vector<std::pair<i64, i64>>{{9973, 1}});
    CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("factorization multiplies back") {
    for (i64 n = 1; n <= 3000; n++) {
        FactoredInteger f = factorize(n);
        i64 product = 1;
        for (auto [p, e] : f.factors) {
            CHECK(is_prime(p));
            for (i64 i = 0; i < e; i++) product *= p;
        }
        CHECK(product == n);
        for (std::size_t i = 1; i < f.factors.size(); i++)
            CHECK(f.factors[i - 1].first < f.factors[i].first);
    }
}

TEST_CASE("the three verifiers agree on random systems") {
    for (std::uint64_t seed = 1; seed <= 60; seed++) {
        Ecs system = generate_natural(seed, 6, {2, 3, 5}, 5000).system;
        bool crt = verify_crt(system);
        CoverReport scan = verify_scan(system, 10000);
        CHECK(scan.is_exact == crt);
        CHECK(verify_genfun(system, 10000) == crt);
        CHECK(crt); // generator outputs are exact

        if (system.is_trivial()) continue;
        // knock one class sideways: guaranteed to break exactness
        std::vector<ResidueClass> classes = system.classes();
        ResidueClass& last = classes.back();
        CHECK(last.modulus() > 1);
        last = ResidueClass(last.residue() + 1, last.modulus());
        Ecs broken(std::move(classes));
        bool crt_b = verify_crt(broken);
        CHECK_FALSE(crt_b);
        CHECK(verify_scan(broken, 10000).is_exact == crt_b);
        CHECK(verify_genfun(broken, 10000) == crt_b);
    }
}

TEST_CASE("no exact system has coprime moduli both greater than one") {
    for (std::uint64_t seed = 1; seed <= 40; seed++) {
        Ecs system = generate_natural(seed, 7, {2, 3, 5, 7}, 100000).system;
        const auto moduli = system.distinct_moduli();
        for (std::size_t i = 0; i < moduli.size(); i++)
            for (std::size_t j = i + 1; j < moduli.size(); j++)
                if (moduli[i] > 1 && moduli[j] > 1)
                    CHECK(std::gcd(moduli[i], moduli[j]) > 1);
    }
}

TEST_CASE("the greatest modulus repeats in every non-trivial exact system") {
    for (std::uint64_t seed = 1; seed <= 60; seed++) {
        Ecs system = generate_natural(seed, 6, {2, 3, 5}, 100000).system;
        if (system.is_trivial()) continue;
        i64 greatest = system.classes().back().modulus();
        i64 count = 0;
        for (const auto& c : system.classes())
            if (c.modulus() == greatest) count++;
        CHECK(count >= 2);
    }
}
