#include "abelia/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace abelia {

u64 b_bound(i64 a) {
    if (a > 0) throw std::invalid_argument("b_bound: requires a <= 0");
    u128 m = static_cast<u128>(1 - 2 * i128(a));
    // largest B with 27 B^2 <= m^3
    u64 b = isqrt(m * m * m / 27);
    while (u128(27) * u128(b + 1) * (b + 1) <= m * m * m) ++b;
    while (b > 0 && u128(27) * u128(b) * b > m * m * m) --b;
    return b;
}

void for_each_family_at(i64 a, const std::function<void(TraceOneCubic, GaloisClass)>& fn) {
    i64 bb = static_cast<i64>(b_bound(a));
    for (i64 b = -bb; b <= bb; ++b) {
        TraceOneCubic f{a, b};
        i128 d = discriminant(f);
        if (d < 0) continue;  // family polynomials are totally real
        if (d == 0) {
            fn(f, GaloisClass::SplitDouble);  // double root is rational, hence integral
            continue;
        }
        if (!is_square(u128(d))) continue;
        GaloisClass c = classify(f);
        if (c == GaloisClass::C3Irreducible || c == GaloisClass::SplitDistinct) fn(f, c);
    }
}

u64 brute_c3_count_for_a(i64 a) {
    u64 count = 0;
    for_each_family_at(a, [&](TraceOneCubic, GaloisClass c) {
        if (c == GaloisClass::C3Irreducible) ++count;
    });
    return count;
}

std::vector<u64> weighted_count_by_height(u64 h2, int threads) {
    if (h2 < 1) throw std::invalid_argument("weighted_count_by_height: h2 must be >= 1");
    std::vector<u64> w(h2 + 1, 0);
    i64 amin = -static_cast<i64>((h2 - 1) / 3);  // 1 - 3a <= h2
    if (threads < 1) threads = 1;
    auto scan = [&](std::vector<u64>& acc, i64 a) {
        u64 n = static_cast<u64>(1 - 3 * a);
        for_each_family_at(a, [&](TraceOneCubic, GaloisClass c) {
            acc[n] += c == GaloisClass::SplitDouble ? 1 : 2;
        });
    };
    if (threads == 1) {
        for (i64 a = 0; a >= amin; --a) scan(w, a);
        return w;
    }
    std::atomic<i64> next{0};
    std::vector<std::vector<u64>> parts(threads, std::vector<u64>(h2 + 1, 0));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            while (true) {
                i64 a = -next.fetch_add(1);
                if (a < amin) break;
                scan(parts[t], a);
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts) {
        for (u64 n = 0; n <= h2; ++n) w[n] += part[n];
    }
    return w;
}

u64 fast_c3_count_toric(u64 h2, const CoefficientTable& table, const ReducibleCensus& census) {
    if (table.limit < h2) throw std::invalid_argument("fast_c3_count_toric: table too small");
    u64 s = partial_sum(table, h2);
    u64 red = census.count_disc_zero + 2 * census.count_disc_nonzero;
    if (s < red || (s - red) % 2 != 0)
        throw std::logic_error("fast_c3_count_toric: identity value is not a nonnegative integer");
    return (s - red) / 2;
}

u64 count_c3_root_height(double H) {
    if (H < 0) throw std::invalid_argument("count_c3_root_height: H must be nonnegative");
    if (H > 50) throw std::invalid_argument("count_c3_root_height: direct scan budget is H <= 50");
    i64 amax = static_cast<i64>(std::floor(H * H + 1e-9));
    u64 bmax = static_cast<u64>(std::floor(H * H * H + 1e-9));
    u64 count = 0;
    for (i64 a = 0; a >= -amax; --a) {
        i64 bb = static_cast<i64>(std::min(b_bound(a), bmax));
        for (i64 b = -bb; b <= bb; ++b) {
            TraceOneCubic f{a, b};
            i128 d = discriminant(f);
            if (d <= 0 || !is_square(u128(d))) continue;
            if (classify(f) == GaloisClass::C3Irreducible) ++count;
        }
    }
    return count;
}

}  // namespace abelia
