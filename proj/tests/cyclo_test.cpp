#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "abelia/cyclo.hpp"
#include "abelia/enumerate.hpp"

using namespace abelia;

TEST_CASE("norm and trace") {
    auto [n1, t1] = norm_trace({rational(1), rational(0)});
    CHECK(n1 == 1);
    CHECK(t1 == 2);
    auto [n2, t2] = norm_trace({rational(1), rational(3)});
    CHECK(n2 == 7);
    CHECK(t2 == -1);
    auto [n3, t3] = norm_trace({rational(-2), rational(0)});
    CHECK(n3 == 4);
    CHECK(t3 == -4);
    CHECK_THROWS_AS(norm_trace({rational(0), rational(0)}), std::invalid_argument);
}

TEST_CASE("multiplication") {
    CycloElement z{rational(0), rational(1)};
    CycloElement zz = multiply(z, z);
    CHECK(zz == CycloElement{rational(-1), rational(-1)});
    CycloElement e{rational(1), rational(3)};
    CycloElement id{rational(1), rational(0)};
    CHECK(multiply(id, e) == e);
    CycloElement sq = multiply(e, e);
    CHECK(sq == CycloElement{rational(-8), rational(-3)});
    CHECK(norm_trace(sq).first == 49);
}

TEST_CASE("norm is multiplicative") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        CycloElement e{rational(i64(rng() % 19) - 9, i64(rng() % 5) + 1),
                       rational(i64(rng() % 19) - 9, i64(rng() % 5) + 1)};
        CycloElement f{rational(i64(rng() % 19) - 9, i64(rng() % 5) + 1),
                       rational(i64(rng() % 19) - 9, i64(rng() % 5) + 1)};
        if ((e.u == 0 && e.v == 0) || (f.u == 0 && f.v == 0)) continue;
        CycloElement p = multiply(e, f);
        if (p.u == 0 && p.v == 0) continue;
        CHECK(norm_trace(p).first == norm_trace(e).first * norm_trace(f).first);
    }
}

TEST_CASE("element to cubic") {
    auto [a1, b1] = to_cubic({rational(1), rational(0)});
    CHECK(a1 == 0);
    CHECK(b1 == 0);
    auto [a2, b2] = to_cubic({rational(1), rational(3)});
    CHECK(a2 == -2);
    CHECK(b2 == 1);
    auto [a3, b3] = to_cubic({rational(-2), rational(0)});
    CHECK(a3 == -1);
    CHECK(b3 == 1);
    // the printed variant flips the sign of b
    auto [a4, b4] = to_cubic({rational(1), rational(3)}, SignConvention::Printed);
    CHECK(a4 == -2);
    CHECK(b4 == -1);
}

TEST_CASE("cubic to quadratic") {
    QuadraticData g1 = quadratic_of(TraceOneCubic{-2, 1});
    CHECK(g1.T == -1);
    CHECK(g1.N == 7);
    CHECK(quadratic_string(g1) == "t^2 + t + 7");
    QuadraticData g2 = quadratic_of(TraceOneCubic{-2, 0});
    CHECK(g2.T == rational(20, 7));
    CHECK(g2.N == 7);
    QuadraticData g3 = quadratic_of(TraceOneCubic{-4, 4});
    CHECK(g3.T == rational(-70, 13));
    CHECK(g3.N == 13);
    CHECK_THROWS_AS(quadratic_of(rational(1, 3), rational(0)), std::invalid_argument);
}

TEST_CASE("elements of a polynomial") {
    auto e1 = elements_of({0, 0});
    REQUIRE(e1.size() == 1);
    CHECK(e1[0] == CycloElement{rational(1), rational(0)});
    auto e2 = elements_of({-2, 1});
    REQUIRE(e2.size() == 2);
    CHECK(e2[0] == CycloElement{rational(1), rational(3)});
    CHECK(e2[1] == CycloElement{rational(-2), rational(-3)});
    auto e3 = elements_of({-1, 1});
    REQUIRE(e3.size() == 1);
    CHECK(e3[0] == CycloElement{rational(-2), rational(0)});
    CHECK_THROWS_AS(elements_of({-3, 2}), std::domain_error);
}

TEST_CASE("integrality predicate") {
    CHECK(is_integral_image({rational(1), rational(3)}));
    CHECK(!is_integral_image({rational(1, 2), rational(1, 2)}));
    CHECK(is_integral_image({rational(-2), rational(0)}));
}

TEST_CASE("height") {
    CHECK(height({rational(1), rational(0)}) == doctest::Approx(1.0));
    CHECK(height({rational(1), rational(3)}) == doctest::Approx(std::sqrt(7.0)));
    CHECK(height({rational(-2), rational(0)}) == doctest::Approx(2.0));
}

TEST_CASE("roundtrip on the family up to height squared 300") {
    i64 amin = -99;
    for (i64 a = 0; a >= amin; --a) {
        for_each_family_at(a, [&](TraceOneCubic f, GaloisClass) {
            auto elems = elements_of(f);
            CHECK(static_cast<int>(elems.size()) == weight(f));
            for (const CycloElement& e : elems) {
                auto [ca, cb] = to_cubic(e);
                CHECK(ca == f.a);
                CHECK(cb == f.b);
                CHECK(is_integral_image(e));
                CHECK(height(e) * height(e) ==
                      doctest::Approx(double(toric_height_squared(f))));
            }
            QuadraticData g = quadratic_of(f);
            rational dg = g.T * g.T - 4 * g.N;
            CHECK(dg <= 0);
            CHECK(dg * g.N * g.N == -27 * rational(i64(discriminant(f))));
        });
    }
}

TEST_CASE("rational rendering") {
    CHECK(to_string(rational(-20, 7)) == "-20/7");
    CHECK(to_string(rational(5)) == "5");
    QuadraticData g = quadratic_of(TraceOneCubic{-2, 0});
    CHECK(quadratic_string(g) == "t^2 - 20/7 t + 7");
}
