#pragma once

#include <string>
#include <vector>

#include "abelia/arith.hpp"

namespace abelia {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Tolerances {
    double route_agreement = 1e-6;    // two-route constants
    double c_identity = 1e-10;        // C = (3/4) c2
    double census_band_abs = 2.0;     // disc-zero count vs H/3
    double census_band_rel = 0.005;   // disc-nonzero count vs asymptotic, per H^2
    double tauberian = 0.02;          // second-term fit at X = 1e8
    double tauberian_fallback = 0.05; // when the sieve falls back to 1e7
    double ratio_lo = 0.9, ratio_hi = 1.1;
    u64 tauberian_X = 100'000'000;
    u64 tauberian_X_fallback = 10'000'000;
    u64 prime_cutoff = 10'000'000;
};

Tolerances tolerance_profile(const std::string& name);  // "default" or "loose"

// The eight checks, numbered as in the acceptance gate.
CheckResult check_table_reproduction(const Tolerances& tol);   // 1
CheckResult check_coefficient_oracle(const Tolerances& tol);   // 2
CheckResult check_exact_formula(const Tolerances& tol);        // 3
CheckResult check_coefficient_structure(const Tolerances& tol);// 4
CheckResult check_reducible_counts(const Tolerances& tol);     // 5
CheckResult check_constants(const Tolerances& tol);            // 6
CheckResult check_tauberian_fit(const Tolerances& tol);        // 7
CheckResult check_cyclotomic(const Tolerances& tol);           // 8

CheckResult run_check(int id, const Tolerances& tol);

// suites: dn -> {2,4,7}; thm12 -> {3,5}; cyclo -> {1,8}; constants -> {6}; all
std::vector<int> suite_checks(const std::string& suite);

}  // namespace abelia
