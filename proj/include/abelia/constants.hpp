#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "abelia/arith.hpp"

namespace abelia {

using real50 = boost::multiprecision::cpp_bin_float_50;

// Partial Euler product / prime sum with a rigorous (crude) tail bound.
struct EulerProductValue {
    real50 value;
    real50 tail_bound;
    u64 prime_cutoff = 0;
};

constexpr u64 kDefaultPrimeCutoff = 10'000'000;

real50 euler_gamma();
real50 L1_chi();       // pi / (3 sqrt 3), chi the quadratic character mod 3
real50 Lprime1_chi();  // via the Gamma/gamma closed form, > 12 digits

// E(s) = (1 - 3^-z)^2 prod_{q==2} (1 - q^-2z) prod_{p==1} (1 - 3p^-2z + 2p^-3z),
// z = s/2, evaluated at s = 2; derivative taken in s.
EulerProductValue E_at_2(u64 prime_cutoff);       // rejects cutoffs below 1e3
EulerProductValue Eprime_at_2(u64 prime_cutoff);

// prime sums appearing in the printed c1/c2 expansion
EulerProductValue sum_q_display(u64 prime_cutoff);  // sum_{q==2} log q / (q^2 - 1)
EulerProductValue sum_p_display(u64 prime_cutoff);  // sum_{p==1} (p+1) log p / (p^3 - 3p + 2)

// Laurent data of the height zeta function at s = 2, both routes.
real50 c2_laurent(u64 prime_cutoff = kDefaultPrimeCutoff);  // 4 L(1,chi)^2 E(2)
real50 c2_display(u64 prime_cutoff = kDefaultPrimeCutoff);  // 16 pi^2/243 * products
real50 c1_laurent(u64 prime_cutoff = kDefaultPrimeCutoff);
real50 c1_over_c2_display(u64 prime_cutoff = kDefaultPrimeCutoff);

struct ConstantsReport {
    u64 prime_cutoff = 0;
    real50 gamma_euler;
    real50 L1, Lprime1;
    EulerProductValue E2, Eprime2;
    real50 c2, c2_by_display, c2_route_delta;
    real50 c1;
    real50 c1_over_c2, c1_over_c2_by_display, c1_over_c2_route_delta;
    real50 C, C_by_display, C_identity_delta;  // C = (3/4) c2
    real50 D_standard;                         // (3/4)(c1 - c2/2)
    real50 D_by_display;                       // C * printed c1/c2 expansion
};

ConstantsReport constants_report(u64 prime_cutoff = kDefaultPrimeCutoff);

}  // namespace abelia
