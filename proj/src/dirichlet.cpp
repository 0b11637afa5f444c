#include "abelia/dirichlet.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace abelia {

namespace {

// per-prime-power factor of the multiplicative coefficient
u64 prime_power_factor(u64 p, unsigned e) {
    if (p == 3) return 0;
    if (p % 3 == 1) return 1 + 3ULL * e;
    return (e % 2 == 0) ? 1 : 0;
}

void note_multiple_of_three_once() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        std::fprintf(stderr,
                     "note: coefficients at multiples of 3 are 0 by convention "
                     "(the series omits the Euler factor at 3)\n");
    });
}

constexpr u64 kSieveBudget = 250'000'000;  // 1 GB of 32-bit values
constexpr u64 kSegment = 1u << 20;

void sieve_range(u64 lo, u64 hi, const std::vector<std::uint32_t>& primes,
                 std::vector<std::uint32_t>& values) {
    std::vector<u64> rem(hi - lo + 1);
    std::vector<std::uint32_t> val(hi - lo + 1, 1);
    for (u64 n = lo; n <= hi; ++n) rem[n - lo] = n;
    for (std::uint32_t p : primes) {
        u64 start = ((lo + p - 1) / p) * p;
        for (u64 m = start; m <= hi; m += p) {
            unsigned e = 0;
            u64& r = rem[m - lo];
            while (r % p == 0) r /= p, ++e;
            val[m - lo] = static_cast<std::uint32_t>(val[m - lo] * prime_power_factor(p, e));
        }
    }
    for (u64 n = lo; n <= hi; ++n) {
        u64 r = rem[n - lo];
        u64 v = val[n - lo];
        if (r > 1) v *= prime_power_factor(r, 1);  // leftover prime > sqrt(N)
        values[n] = static_cast<std::uint32_t>(v);
    }
}

}  // namespace

u64 coefficient(const Factorization& f) {
    for (auto [p, e] : f.factors) {
        if (p == 3) return 0;
    }
    // literal divisor sum, kept independent of the closed form
    i64 total = 0;
    for (u64 d : divisors(f)) {
        Factorization fd = factorize(d);
        unsigned w1 = 0;   // distinct primes == 1 (mod 3) in d
        unsigned om2 = 0;  // multiplicity of primes == 2 (mod 3) in d
        for (auto [p, e] : fd.factors) {
            if (p % 3 == 1) ++w1;
            if (p % 3 == 2) om2 += e;
        }
        i64 term = 1;
        for (unsigned i = 0; i < w1; ++i) term *= 3;
        if (om2 % 2 == 1) term = -term;
        total += term;
    }
    if (total < 0) throw std::logic_error("coefficient: negative divisor sum");
    return static_cast<u64>(total);
}

u64 coefficient(u64 n) {
    if (n == 0) throw std::invalid_argument("coefficient: n must be positive");
    if (n % 3 == 0) {
        note_multiple_of_three_once();
        return 0;
    }
    return coefficient(factorize(n));
}

u64 coefficient_closed(const Factorization& f) {
    u64 r = 1;
    for (auto [p, e] : f.factors) {
        r *= prime_power_factor(p, e);
        if (r == 0) return 0;
    }
    return r;
}

u64 coefficient_closed(u64 n) {
    if (n == 0) throw std::invalid_argument("coefficient_closed: n must be positive");
    return coefficient_closed(factorize(n));
}

CoefficientTable sieve_coefficients(u64 N, int threads) {
    if (N == 0) throw std::invalid_argument("sieve_coefficients: N must be positive");
    if (N > kSieveBudget) throw std::length_error("sieve_coefficients: N exceeds memory budget");
    CoefficientTable table;
    table.limit = N;
    table.values.assign(N + 1, 0);
    table.values[1] = 1;
    if (N == 1) return table;
    auto primes = primes_up_to(isqrt(N));
    u64 nseg = (N - 1) / kSegment + 1;
    if (threads < 1) threads = 1;
    std::atomic<u64> next{0};
    auto work = [&] {
        while (true) {
            u64 s = next.fetch_add(1);
            if (s >= nseg) break;
            u64 lo = s * kSegment + 1, hi = std::min(N, (s + 1) * kSegment);
            if (lo < 2) lo = 2;
            sieve_range(lo, hi, primes, table.values);
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return table;
}

u64 partial_sum(const CoefficientTable& table, u64 X) {
    if (X > table.limit) throw std::out_of_range("partial_sum: X exceeds table limit");
    u64 s = 0;
    for (u64 n = 1; n <= X; ++n) s += table.values[n];
    return s;
}

double main_term(double X, double c2, double c1, bool printed_variant) {
    double second = printed_variant ? c1 / 2 : (c1 / 2 - c2 / 4);
    return (c2 / 4) * X * std::log(X) + second * X;
}

void save_table(const CoefficientTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("save_table: cannot open " + path);
    out.write("ABELIA1", 7);
    u64 n = table.limit;
    unsigned char hdr[8];
    for (int i = 0; i < 8; ++i) hdr[i] = static_cast<unsigned char>((n >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(hdr), 8);
    std::vector<unsigned char> buf;
    for (u64 k = 1; k <= table.limit;) {
        u64 cnt = std::min<u64>(table.limit - k + 1, 1u << 18);
        buf.resize(cnt * 4);
        for (u64 i = 0; i < cnt; ++i) {
            std::uint32_t v = table.values[k + i];
            for (int j = 0; j < 4; ++j)
                buf[i * 4 + j] = static_cast<unsigned char>((v >> (8 * j)) & 0xff);
        }
        out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        k += cnt;
    }
    if (!out) throw std::runtime_error("save_table: write failed for " + path);
}

std::optional<CoefficientTable> load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    char magic[7];
    in.read(magic, 7);
    if (!in || std::memcmp(magic, "ABELIA1", 7) != 0) return std::nullopt;
    unsigned char hdr[8];
    in.read(reinterpret_cast<char*>(hdr), 8);
    if (!in) return std::nullopt;
    u64 n = 0;
    for (int i = 0; i < 8; ++i) n |= u64(hdr[i]) << (8 * i);
    if (n == 0 || n > kSieveBudget) return std::nullopt;
    CoefficientTable table;
    table.limit = n;
    table.values.assign(n + 1, 0);
    std::vector<unsigned char> buf;
    for (u64 k = 1; k <= n;) {
        u64 cnt = std::min<u64>(n - k + 1, 1u << 18);
        buf.resize(cnt * 4);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (!in) return std::nullopt;
        for (u64 i = 0; i < cnt; ++i) {
            std::uint32_t v = 0;
            for (int j = 0; j < 4; ++j) v |= std::uint32_t(buf[i * 4 + j]) << (8 * j);
            table.values[k + i] = v;
        }
        k += cnt;
    }
    return table;
}

}  // namespace abelia
