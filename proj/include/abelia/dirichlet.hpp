#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abelia/arith.hpp"

namespace abelia {

// Sieved coefficients d_1..d_N of the height zeta function.
struct CoefficientTable {
    u64 limit = 0;
    std::vector<std::uint32_t> values;  // 1-indexed; values[0] unused
    std::uint32_t at(u64 n) const { return values[n]; }
};

// Divisor-sum route: sum over d | n of 3^omega(P1(d)) * (-1)^bigomega(P2(d)).
// Returns 0 for 3 | n (the series omits the Euler factor at 3); point queries
// at multiples of 3 note the convention once on stderr.
u64 coefficient(u64 n);
u64 coefficient(const Factorization& f);

// Closed form: 0 if 3 | n or some prime q == 2 (mod 3) divides n to odd
// order, else the product of (1 + 3 v_p(n)) over primes p == 1 (mod 3).
u64 coefficient_closed(u64 n);
u64 coefficient_closed(const Factorization& f);

// Segmented sieve using the closed form; O(N log log N).
CoefficientTable sieve_coefficients(u64 N, int threads = 1);

u64 partial_sum(const CoefficientTable& table, u64 X);

// (c2/4) X ln X + (c1/2 - c2/4) X; the printed variant (c1/2) X is exposed
// behind the flag for comparison.
double main_term(double X, double c2, double c1, bool printed_variant = false);

// Binary cache: magic "ABELIA1", N as 8-byte little-endian, then N 4-byte
// little-endian values.
void save_table(const CoefficientTable& table, const std::string& path);
std::optional<CoefficientTable> load_table(const std::string& path);

}  // namespace abelia
