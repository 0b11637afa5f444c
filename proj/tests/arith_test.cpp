#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "abelia/arith.hpp"

using namespace abelia;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).factors.empty());
    auto f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<u64, unsigned>{2, 2});
    CHECK(f12.factors[1] == std::pair<u64, unsigned>{3, 1});
    auto f571 = factorize(571);
    REQUIRE(f571.factors.size() == 1);
    CHECK(f571.factors[0] == std::pair<u64, unsigned>{571, 1});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize large inputs") {
    // semiprime beyond the trial-division range
    u64 p = 1'000'003, q = 1'000'033;
    auto f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == p);
    CHECK(f.factors[1].first == q);
    auto g = factorize((u64(1) << 61) - 1);  // Mersenne prime
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].second == 1);
}

TEST_CASE("residue_part") {
    CHECK(residue_part(factorize(14), 1) == 7);
    CHECK(residue_part(factorize(14), 2) == 2);
    CHECK(residue_part(factorize(1), 1) == 1);
    CHECK(residue_part(factorize(45), 2) == 5);
    CHECK_THROWS_AS(residue_part(factorize(6), 3), std::invalid_argument);
}

TEST_CASE("omega and big_omega") {
    CHECK(omega(factorize(12)) == 2);
    CHECK(big_omega(factorize(12)) == 3);
    CHECK(omega(factorize(1)) == 0);
    CHECK(big_omega(factorize(1)) == 0);
    CHECK(omega(factorize(49)) == 1);
    CHECK(big_omega(factorize(49)) == 2);
}

TEST_CASE("divisors") {
    CHECK(divisors(factorize(1)) == std::vector<u64>{1});
    CHECK(divisors(factorize(7)) == std::vector<u64>{1, 7});
    CHECK(divisors(factorize(12)) == std::vector<u64>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("spf sieve") {
    SpfSieve s(100);
    CHECK(s.spf(9) == 3);
    CHECK(s.spf(7) == 7);
    CHECK(s.spf(91) == 7);
    auto f = s.factorize(60);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<u64, unsigned>{2, 2});
    CHECK_THROWS_AS(SpfSieve(1), std::invalid_argument);
    CHECK_THROWS_AS(SpfSieve(u64(3e9)), std::length_error);
}

TEST_CASE("is_square") {
    CHECK(sqrt_if_square(49).value() == 7);
    CHECK(!sqrt_if_square(48));
    CHECK(sqrt_if_square(0).value() == 0);
    u128 big = u128(3'037'000'499ULL) * 3'037'000'499ULL;
    CHECK(sqrt_if_square(big).value() == 3'037'000'499ULL);
    CHECK(!sqrt_if_square(big + 1));
    for (u64 n = 0; n <= 100'000; ++n) {
        u64 r = isqrt(n);
        CHECK(is_square(n) == (r * r == n));
    }
}

TEST_CASE("residue decomposition identity to 1e6") {
    SpfSieve s(1'000'000);
    for (u64 n = 1; n <= 1'000'000; ++n) {
        Factorization f = s.factorize(n);
        u64 v3 = 1;
        for (auto [p, e] : f.factors) {
            if (p == 3) {
                for (unsigned i = 0; i < e; ++i) v3 *= 3;
            }
        }
        if (residue_part(f, 1) * residue_part(f, 2) * v3 != n) {
            FAIL("decomposition fails at n=", n);
        }
    }
}

TEST_CASE("multiplicativity of omega-type functions") {
    for (u64 m : {4ULL, 9ULL, 35ULL, 121ULL, 13ULL}) {
        for (u64 n : {7ULL, 11ULL, 26ULL, 55ULL, 17ULL}) {
            if (std::gcd(m, n) != 1) continue;
            auto fm = factorize(m), fn = factorize(n), fmn = factorize(m * n);
            CHECK(big_omega(fmn) == big_omega(fm) + big_omega(fn));
            CHECK(residue_part(fmn, 1) == residue_part(fm, 1) * residue_part(fn, 1));
            CHECK(residue_part(fmn, 2) == residue_part(fm, 2) * residue_part(fn, 2));
            CHECK(divisors(fmn).size() == divisors(fm).size() * divisors(fn).size());
        }
    }
}
