#include "abelia/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "abelia/dirichlet.hpp"

namespace abelia {

namespace {

// threshold on height squared from a real height, tolerating sqrt roundoff
u64 height_to_h2(double H) {
    if (H < 1) throw std::invalid_argument("height must be >= 1");
    double h2 = H * H;
    double r = std::round(h2);
    if (std::abs(h2 - r) < 1e-6) return static_cast<u64>(r);
    return static_cast<u64>(std::floor(h2));
}

}  // namespace

u64 on_ellipse_count(u64 n) {
    if (n == 0 || n % 3 != 1) throw std::invalid_argument("on_ellipse_count: need n == 1 (mod 3)");
    i64 level = static_cast<i64>((n - 1) / 3);
    // y^2 + (x-1) y + (x^2 - x - level) = 0; discriminant -3x^2 + 2x + 1 + 4*level
    i64 xr = static_cast<i64>(isqrt(u128(4) * n)) / 3 + 2;
    u64 count = 0;
    for (i64 x = -xr; x <= xr; ++x) {
        i128 d = -i128(3) * x * x + 2 * x + 1 + 4 * i128(level);
        if (d < 0) continue;
        auto s = sqrt_if_square(u128(d));
        if (!s) continue;
        // parity is automatic: d == (x-1)^2 (mod 4)
        count += (*s == 0) ? 1 : 2;
    }
    return count;
}

u64 c3_count_for_a(i64 a) {
    if (a > 0) throw std::invalid_argument("c3_count_for_a: requires a <= 0");
    u64 n = static_cast<u64>(1 - 3 * a);
    u64 s = coefficient(n);
    u64 e = on_ellipse_count(n);
    i64 num = 3 * static_cast<i64>(s) - static_cast<i64>(e);
    if (num < 0 || num % 6 != 0)
        throw std::logic_error("c3_count_for_a: formula value is not a nonnegative integer");
    return static_cast<u64>(num / 6);
}

ReducibleCensus reducible_census_h2(u64 h2) {
    if (h2 < 1) throw std::invalid_argument("reducible_census: height must be >= 1");
    ReducibleCensus census;
    census.h2 = h2;
    i64 level = static_cast<i64>((h2 - 1) / 3);
    // canonical representatives: sorted triples x <= y <= z = 1-x-y
    i64 xr = static_cast<i64>(isqrt(u128(1) + 2 * u128(level))) + 1;
    for (i64 x = -xr; x <= 0; ++x) {
        i128 d = -i128(3) * x * x + 2 * x + 1 + 4 * i128(level);
        if (d < 0) continue;
        i64 s = static_cast<i64>(isqrt(u128(d)));
        auto floordiv2 = [](i64 v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };
        auto ceildiv2 = [](i64 v) { return v >= 0 ? (v + 1) / 2 : -(-v / 2); };
        // y range where the quadratic form stays within the level
        i64 ylo = ceildiv2(1 - x - s);
        i64 yhi = floordiv2(1 - x + s);
        i64 ymax = floordiv2(1 - x);  // y <= z
        i64 lo = std::max(x, ylo), hi = std::min(ymax, yhi);
        if (lo > hi) continue;
        u64 cnt = static_cast<u64>(hi - lo + 1);
        u64 dz = 0;
        if (x >= lo && x <= hi) ++dz;                       // y == x
        if ((1 - x) % 2 == 0) {
            i64 yz = (1 - x) / 2;                           // y == z
            if (yz >= lo && yz <= hi) ++dz;
        }
        census.count_disc_zero += dz;
        census.count_disc_nonzero += cnt - dz;
    }
    return census;
}

ReducibleCensus reducible_census(double H) { return reducible_census_h2(height_to_h2(H)); }

u64 stabilized_point_count(double H) {
    u64 h2 = height_to_h2(H);
    i64 level = static_cast<i64>((h2 - 1) / 3);
    // each line is parametrized by t with quadratic form value 3t^2 - 2t
    i64 tr = static_cast<i64>(isqrt(u128(level))) + 1;
    u64 cnt = 0;
    for (i64 t = -tr; t <= tr; ++t) {
        if (3 * t * t - 2 * t <= level) ++cnt;
    }
    return 3 * cnt;  // three lines, no integer intersections
}

double reducible_asymptotic(double H) {
    return std::numbers::pi / (9 * std::sqrt(3.0)) * H * H - H / 6;
}

}  // namespace abelia
