#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "abelia/counting.hpp"
#include "abelia/dirichlet.hpp"
#include "abelia/enumerate.hpp"

using namespace abelia;

TEST_CASE("b bound") {
    CHECK(b_bound(0) == 0);
    CHECK(b_bound(-1) == 1);
    CHECK(b_bound(-2) == 2);
    // exact flooring: B is the largest b with 27 b^2 <= (1-2a)^3
    for (i64 a = 0; a >= -500; --a) {
        u64 b = b_bound(a);
        u128 m = u128(1 - 2 * a);
        CHECK(u128(27) * b * b <= m * m * m);
        CHECK(u128(27) * (b + 1) * (b + 1) > m * m * m);
    }
}

TEST_CASE("brute per-a counts") {
    CHECK(brute_c3_count_for_a(-2) == 1);
    CHECK(brute_c3_count_for_a(-6) == 1);
    CHECK(brute_c3_count_for_a(0) == 0);
}

TEST_CASE("weighted counts by height") {
    auto w3 = weighted_count_by_height(9);
    CHECK(w3[1] == 1);
    CHECK(w3[4] == 1);
    CHECK(w3[7] == 4);
    auto w10 = weighted_count_by_height(10);
    CHECK(w10[10] == 0);
    auto w1 = weighted_count_by_height(1);
    CHECK(w1[1] == 1);
}

TEST_CASE("weighted counts match coefficients to 1200") {
    auto w = weighted_count_by_height(1200);
    for (u64 n = 1; n <= 1200; ++n) {
        u64 expect = (n % 3 == 1) ? coefficient(n) : 0;
        if (w[n] != expect) FAIL("mismatch at n=", n);
    }
}

TEST_CASE("thread-count independence") {
    auto w1 = weighted_count_by_height(600, 1);
    auto w2 = weighted_count_by_height(600, 2);
    auto w8 = weighted_count_by_height(600, 8);
    CHECK(w1 == w2);
    CHECK(w1 == w8);
}

TEST_CASE("fast toric count") {
    CoefficientTable t = sieve_coefficients(6400);
    CHECK(fast_c3_count_toric(7, t, reducible_census_h2(7)) == 1);
    CHECK(fast_c3_count_toric(1, t, reducible_census_h2(1)) == 0);
    for (u64 h : {30ULL, 80ULL}) {
        u64 fast = fast_c3_count_toric(h * h, t, reducible_census_h2(h * h));
        u64 brute = 0;
        for (i64 a = 0; 1 - 3 * a <= i64(h * h); --a) brute += brute_c3_count_for_a(a);
        CHECK(fast == brute);
    }
}

TEST_CASE("root-height counts") {
    CHECK(count_c3_root_height(1) == 0);
    CHECK(count_c3_root_height(2) == 2);
    CHECK(count_c3_root_height(std::sqrt(2.0)) == 1);
    CHECK_THROWS_AS(count_c3_root_height(51), std::invalid_argument);
}
