#include "abelia/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace abelia {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle-finding variant of Pollard rho; n odd composite, not a prime power of small prime.
u64 brent_rho(u64 n) {
    if (n % 2 == 0) return 2;
    u64 seed = 1;
    while (true) {
        ++seed;
        u64 y = seed, c = seed ^ 0x9e3779b97f4a7c15ULL;
        c %= n;
        if (c == 0) c = 1;
        u64 g = 1, q = 1, x = y, ys = y;
        u64 r = 1, m = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

constexpr u64 kSpfBudget = 250'000'000;  // 1 GB of 32-bit entries

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    u64 m = n;
    auto push = [&](u64 p) {
        unsigned e = 0;
        while (m % p == 0) m /= p, ++e;
        if (e) f.factors.emplace_back(p, e);
    };
    push(2);
    push(3);
    for (u64 p = 5; p <= 1'000'000 && p * p <= m; p += 6) {
        push(p);
        push(p + 2);
    }
    if (m > 1) {
        if (m < u64(1'000'002) * 1'000'002 || is_prime(m)) {
            f.factors.emplace_back(m, 1);
        } else {
            std::vector<u64> rest;
            factor_rec(m, rest);
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size();) {
                std::size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                f.factors.emplace_back(rest[i], static_cast<unsigned>(j - i));
                i = j;
            }
        }
    }
    return f;
}

u64 residue_part(const Factorization& f, int j) {
    if (j != 1 && j != 2) throw std::invalid_argument("residue_part: j must be 1 or 2");
    u64 r = 1;
    for (auto [p, e] : f.factors) {
        if (p % 3 != static_cast<u64>(j)) continue;
        for (unsigned i = 0; i < e; ++i) r *= p;
    }
    return r;
}

unsigned omega(const Factorization& f) { return static_cast<unsigned>(f.factors.size()); }

unsigned big_omega(const Factorization& f) {
    unsigned s = 0;
    for (auto [p, e] : f.factors) s += e;
    return s;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (auto [p, e] : f.factors) {
        std::size_t sz = ds.size();
        u64 pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t k = 0; k < sz; ++k) ds.push_back(ds[k] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

SpfSieve::SpfSieve(u64 limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("SpfSieve: limit must be >= 2");
    if (limit > kSpfBudget) throw std::length_error("SpfSieve: limit exceeds memory budget");
    spf_.assign(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            for (u64 j = i; j <= limit; j += i) {
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
}

Factorization SpfSieve::factorize(u64 k) const {
    if (k == 0 || k > limit_) throw std::invalid_argument("SpfSieve::factorize: out of range");
    Factorization f;
    f.n = k;
    while (k > 1) {
        u64 p = spf_[k];
        unsigned e = 0;
        while (k % p == 0) k /= p, ++e;
        f.factors.emplace_back(p, e);
    }
    return f;
}

u64 isqrt(u128 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    // correct the floating seed exactly
    while (u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<u128> sqrt_if_square(u128 n) {
    // quick residue filter: squares mod 64 hit only 12 classes
    static const std::array<bool, 64> kSq64 = [] {
        std::array<bool, 64> t{};
        for (unsigned k = 0; k < 64; ++k) t[(k * k) & 63] = true;
        return t;
    }();
    if (!kSq64[static_cast<unsigned>(n & 63)]) return std::nullopt;
    u64 r = isqrt(n);
    if (u128(r) * r == n) return u128(r);
    return std::nullopt;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!comp[i]) {
            for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
        }
    }
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!comp[i]) primes.push_back(static_cast<std::uint32_t>(i));
    }
    return primes;
}

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? u128(-(v + 1)) + 1 : u128(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace abelia
