#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace abelia {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// n together with its prime-power decomposition, primes ascending.
struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, unsigned>> factors;
};

// Trial division up to 1e6, then a deterministic strong-probable-prime test
// plus Brent-rho splitting. Rejects n = 0.
Factorization factorize(u64 n);

bool is_prime(u64 n);

// Largest divisor of n composed only of primes == j (mod 3); j in {1,2}.
u64 residue_part(const Factorization& f, int j);

unsigned omega(const Factorization& f);      // distinct primes
unsigned big_omega(const Factorization& f);  // with multiplicity

std::vector<u64> divisors(const Factorization& f);  // ascending

// Smallest-prime-factor table for 2..limit; shared batch factorization backend.
class SpfSieve {
public:
    explicit SpfSieve(u64 limit);  // rejects limit < 2 or beyond memory budget
    u64 limit() const { return limit_; }
    u64 spf(u64 k) const { return spf_[k]; }
    Factorization factorize(u64 k) const;

private:
    u64 limit_;
    std::vector<std::uint32_t> spf_;
};

// Floor square root, exact.
u64 isqrt(u128 n);

// Exact perfect-square test (no floating-point acceptance); root when true.
std::optional<u128> sqrt_if_square(u128 n);
inline bool is_square(u128 n) { return sqrt_if_square(n).has_value(); }

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

std::string to_string_i128(i128 v);

}  // namespace abelia
