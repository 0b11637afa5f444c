// Acceptance gate: runs all eight checks at the stated tolerances and prints
// one pass/fail line per check.

#include <chrono>
#include <cstdio>

#include "abelia/verify.hpp"

int main() {
    abelia::Tolerances tol = abelia::tolerance_profile("default");
    bool all_pass = true;
    for (int id = 1; id <= 8; ++id) {
        auto start = std::chrono::steady_clock::now();
        abelia::CheckResult r = abelia::run_check(id, tol);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d (%s): %s [%.1fs] — %s\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", secs, r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
