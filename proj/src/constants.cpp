#include "abelia/constants.hpp"

#include <mutex>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace abelia {

namespace {

real50 pi50() { return boost::math::constants::pi<real50>(); }

// shared, growing prime list (single writer per growth, then read-only)
const std::vector<std::uint32_t>& primes_cached(u64 cutoff) {
    static std::mutex mu;
    static std::vector<std::uint32_t> primes;
    static u64 have = 0;
    std::scoped_lock lock(mu);
    if (cutoff > have) {
        primes = primes_up_to(cutoff);
        have = cutoff;
    }
    return primes;
}

void check_cutoff(u64 cutoff) {
    if (cutoff < 1000) throw std::invalid_argument("prime cutoff must be at least 1e3");
}

real50 log50(u64 n) { return log(real50(n)); }

}  // namespace

real50 euler_gamma() { return boost::math::constants::euler<real50>(); }

real50 L1_chi() { return pi50() / (3 * sqrt(real50(3))); }

real50 Lprime1_chi() {
    // -L'(1,chi) = (pi/sqrt 3)(log(Gamma(1/3)/Gamma(2/3)) - (gamma + log 2pi)/3)
    real50 g13 = boost::math::tgamma(real50(1) / 3);
    real50 g23 = boost::math::tgamma(real50(2) / 3);
    real50 bracket = log(g13 / g23) - (euler_gamma() + log(2 * pi50())) / 3;
    return -pi50() / sqrt(real50(3)) * bracket;
}

EulerProductValue E_at_2(u64 cutoff) {
    check_cutoff(cutoff);
    real50 v = (1 - real50(1) / 3) * (1 - real50(1) / 3);
    for (std::uint32_t p : primes_cached(cutoff)) {
        if (p > cutoff) break;
        if (p == 3) continue;
        real50 pp = real50(p);
        if (p % 3 == 2) {
            v *= 1 - 1 / (pp * pp);
        } else {
            v *= 1 - 3 / (pp * pp) + 2 / (pp * pp * pp);
        }
    }
    // |log factor| <= 4 p^-2 summed over p > cutoff against the integral tail
    return {v, real50(4) / cutoff, cutoff};
}

EulerProductValue Eprime_at_2(u64 cutoff) {
    check_cutoff(cutoff);
    EulerProductValue e = E_at_2(cutoff);
    // d/dz log E at z=1: log 3 from the squared 3-factor, then per prime
    real50 dlog = log50(3);
    for (std::uint32_t p : primes_cached(cutoff)) {
        if (p > cutoff) break;
        if (p == 3) continue;
        real50 pp = real50(p);
        if (p % 3 == 2) {
            dlog += 2 * log(pp) / (pp * pp - 1);
        } else {
            dlog += 6 * (pp - 1) * log(pp) / (pp * pp * pp - 3 * pp + 2);
        }
    }
    real50 v = e.value * dlog / 2;  // dz/ds = 1/2
    real50 tail = (40 * log50(cutoff) + 4) / cutoff;  // generous
    return {v, tail, cutoff};
}

EulerProductValue sum_q_display(u64 cutoff) {
    check_cutoff(cutoff);
    real50 s = 0;
    for (std::uint32_t p : primes_cached(cutoff)) {
        if (p > cutoff) break;
        if (p % 3 != 2) continue;
        real50 pp = real50(p);
        s += log(pp) / (pp * pp - 1);
    }
    return {s, 4 * log50(cutoff) / cutoff, cutoff};
}

EulerProductValue sum_p_display(u64 cutoff) {
    check_cutoff(cutoff);
    real50 s = 0;
    for (std::uint32_t p : primes_cached(cutoff)) {
        if (p > cutoff) break;
        if (p % 3 != 1) continue;
        real50 pp = real50(p);
        s += (pp + 1) * log(pp) / (pp * pp * pp - 3 * pp + 2);
    }
    return {s, 4 * log50(cutoff) / cutoff, cutoff};
}

real50 c2_laurent(u64 cutoff) {
    real50 l = L1_chi();
    return 4 * l * l * E_at_2(cutoff).value;
}

real50 c2_display(u64 cutoff) {
    check_cutoff(cutoff);
    real50 prod = 1;
    for (std::uint32_t p : primes_cached(cutoff)) {
        if (p > cutoff) break;
        if (p == 3) continue;
        real50 pp = real50(p);
        if (p % 3 == 2) {
            prod *= 1 - 1 / (pp * pp);
        } else {
            prod *= 1 - 3 / (pp * pp) + 2 / (pp * pp * pp);
        }
    }
    return 16 * pi50() * pi50() / 243 * prod;
}

real50 c1_laurent(u64 cutoff) {
    real50 l = L1_chi();
    real50 e = E_at_2(cutoff).value;
    real50 ep = Eprime_at_2(cutoff).value;
    return 4 * l * (euler_gamma() * l + Lprime1_chi()) * e + 4 * l * l * ep;
}

real50 c1_over_c2_display(u64 cutoff) {
    real50 g13 = boost::math::tgamma(real50(1) / 3);
    real50 g23 = boost::math::tgamma(real50(2) / 3);
    return 2 * euler_gamma() + log(2 * pi50()) - 3 * log(g13 / g23) +
           real50(9) / 8 * log50(3) + real50(9) / 4 * sum_q_display(cutoff).value +
           real50(27) / 4 * sum_p_display(cutoff).value;
}

ConstantsReport constants_report(u64 cutoff) {
    ConstantsReport r;
    r.prime_cutoff = cutoff;
    r.gamma_euler = euler_gamma();
    r.L1 = L1_chi();
    r.Lprime1 = Lprime1_chi();
    r.E2 = E_at_2(cutoff);
    r.Eprime2 = Eprime_at_2(cutoff);
    r.c2 = c2_laurent(cutoff);
    r.c2_by_display = c2_display(cutoff);
    r.c2_route_delta = fabs(r.c2 - r.c2_by_display);
    r.c1 = c1_laurent(cutoff);
    r.c1_over_c2 = r.c1 / r.c2;
    r.c1_over_c2_by_display = c1_over_c2_display(cutoff);
    r.c1_over_c2_route_delta = fabs(r.c1_over_c2 - r.c1_over_c2_by_display);
    r.C = real50(3) / 4 * r.c2;
    r.C_by_display = 4 * pi50() * pi50() / 81 * (r.c2_by_display / (16 * pi50() * pi50() / 243));
    r.C_identity_delta = fabs(r.C - r.C_by_display);
    r.D_standard = real50(3) / 4 * (r.c1 - r.c2 / 2);
    r.D_by_display = r.C * r.c1_over_c2_by_display;
    return r;
}

}  // namespace abelia
