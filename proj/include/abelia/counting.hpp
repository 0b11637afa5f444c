#pragma once

#include "abelia/arith.hpp"

namespace abelia {

// Orbit census of reducible family polynomials with toric height <= H:
// S3-orbits of integer points (x, y, 1-x-y) with x^2+y^2+xy-x-y <= (H^2-1)/3.
struct ReducibleCensus {
    u64 h2 = 0;  // threshold on height squared
    u64 count_disc_zero = 0;
    u64 count_disc_nonzero = 0;
};

// Integer points on x^2+y^2+xy-x-y = (n-1)/3; requires n == 1 (mod 3).
u64 on_ellipse_count(u64 n);

// Exact count of C3 polynomials with the given a <= 0:
// (3 * divisor_sum(1-3a) - on_ellipse_count(1-3a)) / 6, which must divide
// exactly (failure is a hard error, it would falsify the implementation).
u64 c3_count_for_a(i64 a);

ReducibleCensus reducible_census_h2(u64 h2);
ReducibleCensus reducible_census(double H);

// Closed-region lattice points on one of the fixed lines x=y, y=1-2x, x=1-2y.
u64 stabilized_point_count(double H);

// pi/(9 sqrt 3) H^2 - H/6
double reducible_asymptotic(double H);

}  // namespace abelia
