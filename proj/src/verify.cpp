#include "abelia/verify.hpp"

#include <cmath>
#include <new>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "abelia/constants.hpp"
#include "abelia/counting.hpp"
#include "abelia/cubic.hpp"
#include "abelia/cyclo.hpp"
#include "abelia/dirichlet.hpp"
#include "abelia/enumerate.hpp"

namespace abelia {

namespace {

struct TableRow {
    i64 a, b;
    i64 t_num, t_den;  // trace of g
    i64 n;             // norm of g = height squared
    i64 disc_f;
    i64 dg_num, dg_den;  // disc of g
};

// the twenty worked correspondence rows, frozen
const TableRow kRows[] = {
    {0, 0, 2, 1, 1, 0, 0, 1},
    {-1, 1, -4, 1, 4, 0, 0, 1},
    {-2, 1, -1, 1, 7, 49, -27, 1},
    {-2, 0, 20, 7, 7, 36, -972, 49},
    {-4, 4, -70, 13, 13, 144, -3888, 169},
    {-4, -1, 5, 1, 13, 169, -27, 1},
    {-5, -3, 8, 1, 16, 0, 0, 1},
    {-6, 7, -7, 1, 19, 361, -27, 1},
    {-6, 0, 56, 19, 19, 900, -24300, 361},
    {-8, 12, -10, 1, 25, 0, 0, 1},
    {-190, 719, -31, 1, 571, 15976009, -1323, 1},
    {-190, -800, 23312, 571, 571, 7452900, -201228300, 326041},
    {-192, 720, -17710, 577, 577, 16842816, -454756032, 332929},
    {-192, -171, 11, 1, 577, 26967249, -2187, 1},
    {-196, 1124, -922, 19, 589, 15376, -432, 361},
    {-196, 1109, -1483, 31, 589, 866761, -64827, 961},
    {-196, 539, -673, 31, 589, 24216241, -1811187, 961},
    {-196, 349, -13, 1, 589, 28100601, -2187, 1},
    {-196, 196, -3526, 589, 589, 29811600, -804913200, 346921},
    {-196, -704, 20774, 589, 589, 14288400, -385786800, 346921},
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

}  // namespace

Tolerances tolerance_profile(const std::string& name) {
    Tolerances t;
    if (name == "default") return t;
    if (name == "loose") {
        t.route_agreement *= 10;
        t.c_identity *= 10;
        t.census_band_abs *= 10;
        t.census_band_rel *= 10;
        t.tauberian *= 10;
        t.tauberian_fallback *= 10;
        return t;
    }
    throw std::invalid_argument("unknown tolerance profile: " + name);
}

CheckResult check_table_reproduction(const Tolerances&) {
    CheckResult r{1, "correspondence table reproduction", true, ""};
    for (const TableRow& row : kRows) {
        TraceOneCubic f{row.a, row.b};
        i128 df = discriminant(f);
        i64 h2 = toric_height_squared(f);
        QuadraticData g = quadratic_of(f);
        rational dg = g.T * g.T - 4 * g.N;
        bool ok = df == i128(row.disc_f) && h2 == row.n &&
                  g.T == rational(row.t_num, row.t_den) && g.N == rational(row.n) &&
                  dg == rational(row.dg_num, row.dg_den);
        if (!ok) {
            r.pass = false;
            r.detail = "mismatch at (a,b)=(" + std::to_string(row.a) + "," +
                       std::to_string(row.b) + "): got disc_f=" + to_string_i128(df) +
                       " T=" + to_string(g.T) + " N=" + to_string(g.N) +
                       " disc_g=" + to_string(dg);
            return r;
        }
    }
    r.detail = "all 20 rows reproduced exactly";
    return r;
}

CheckResult check_coefficient_oracle(const Tolerances&) {
    CheckResult r{2, "coefficients vs weighted enumeration to 6001", true, ""};
    const u64 h2 = 6001;
    std::vector<u64> w = weighted_count_by_height(h2);
    for (u64 n = 1; n <= h2; ++n) {
        u64 expect = (n % 3 == 1) ? coefficient(n) : 0;
        if (w[n] != expect) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": weighted count " + std::to_string(w[n]) +
                       " vs coefficient " + std::to_string(expect);
            return r;
        }
    }
    r.detail = "all n <= 6001 agree";
    return r;
}

CheckResult check_exact_formula(const Tolerances&) {
    CheckResult r{3, "exact per-a count vs brute force", true, ""};
    for (i64 a = 0; a >= -2000; --a) {
        u64 formula = c3_count_for_a(a);
        u64 brute = brute_c3_count_for_a(a);
        if (formula != brute) {
            r.pass = false;
            r.detail = "a=" + std::to_string(a) + ": formula " + std::to_string(formula) +
                       " vs brute " + std::to_string(brute);
            return r;
        }
    }
    for (i64 a = 1; a <= 50; ++a) {
        for (i64 b = -10000; b <= 10000; ++b) {
            TraceOneCubic f{a, b};
            i128 d = discriminant(f);
            if (d <= 0 || !is_square(u128(d))) continue;
            if (classify(f) == GaloisClass::C3Irreducible) {
                r.pass = false;
                r.detail = "cyclic cubic with positive a: a=" + std::to_string(a) +
                           " b=" + std::to_string(b);
                return r;
            }
        }
    }
    r.detail = "formula = brute force for 0 >= a >= -2000; no cyclic cubic with a in [1,50]";
    return r;
}

CheckResult check_coefficient_structure(const Tolerances&) {
    CheckResult r{4, "coefficient structure to 1e6", true, ""};
    const u64 N = 1'000'000;
    CoefficientTable table = sieve_coefficients(N);
    SpfSieve spf(N);
    for (u64 n = 1; n <= N; ++n) {
        Factorization f = spf.factorize(n);
        u64 closed = coefficient_closed(f);
        u64 sum = (n % 3 == 0) ? 0 : coefficient(f);
        if (table.values[n] != closed || closed != sum ||
            (n % 3 != 1 && table.values[n] != 0)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n) + ": sieve " + std::to_string(table.values[n]) +
                       ", closed " + std::to_string(closed) + ", divisor sum " +
                       std::to_string(sum);
            return r;
        }
    }
    std::mt19937_64 rng(20260826);
    for (int i = 0; i < 10'000; ++i) {
        u64 m = rng() % 10'000 + 1;
        u64 n = rng() % (100'000'000 / m) + 1;
        if (std::gcd(m, n) != 1) continue;
        if (coefficient_closed(m * n) != coefficient_closed(m) * coefficient_closed(n)) {
            r.pass = false;
            r.detail = "multiplicativity fails at m=" + std::to_string(m) +
                       " n=" + std::to_string(n);
            return r;
        }
    }
    r.detail = "vanishing, closed-form agreement and multiplicativity hold";
    return r;
}

CheckResult check_reducible_counts(const Tolerances& tol) {
    CheckResult r{5, "reducible counts vs stated asymptotics", true, ""};
    double worst = 0;
    i64 worst_h = 0;
    double worst23 = 0;  // deviation from the empirical 2H/3 fit, for the report
    for (i64 h = 1; h <= 1000; ++h) {
        ReducibleCensus c = reducible_census_h2(static_cast<u64>(h) * h);
        double dev = std::abs(static_cast<double>(c.count_disc_zero) - h / 3.0);
        if (dev > worst) worst = dev, worst_h = h;
        worst23 = std::max(worst23,
                           std::abs(static_cast<double>(c.count_disc_zero) - 2.0 * h / 3.0));
    }
    bool clause1 = worst <= tol.census_band_abs;
    bool clause2 = true;
    std::string c2detail;
    for (i64 h : {300, 1000}) {
        ReducibleCensus c = reducible_census_h2(static_cast<u64>(h) * h);
        double dev =
            std::abs(static_cast<double>(c.count_disc_nonzero) - reducible_asymptotic(h));
        c2detail += " |nz(" + std::to_string(h) + ")-asym|=" + fmt(dev);
        if (dev > tol.census_band_rel * h * h) clause2 = false;
    }
    r.pass = clause1 && clause2;
    r.detail = "disc-zero vs H/3: max deviation " + fmt(worst) + " at H=" +
               std::to_string(worst_h) + " (band " + fmt(tol.census_band_abs) +
               "; empirical fit is 2H/3, max deviation " + fmt(worst23) + ");" + c2detail;
    return r;
}

CheckResult check_constants(const Tolerances& tol) {
    CheckResult r{6, "constants: route agreement and tail bounds", true, ""};
    ConstantsReport rep = constants_report(tol.prime_cutoff);
    bool c2_ok = rep.c2_route_delta.convert_to<double>() <= tol.route_agreement;
    bool c1c2_ok = rep.c1_over_c2_route_delta.convert_to<double>() <= tol.route_agreement;
    bool c_ok = rep.C_identity_delta.convert_to<double>() <= tol.c_identity;
    bool tails_ok = true;
    auto tail_check = [&](EulerProductValue lo, EulerProductValue hi) {
        if (fabs(hi.value - lo.value) > lo.tail_bound) tails_ok = false;
    };
    tail_check(E_at_2(1'000'000), E_at_2(10'000'000));
    tail_check(Eprime_at_2(1'000'000), Eprime_at_2(10'000'000));
    tail_check(sum_q_display(1'000'000), sum_q_display(10'000'000));
    tail_check(sum_p_display(1'000'000), sum_p_display(10'000'000));
    r.pass = c2_ok && c1c2_ok && c_ok && tails_ok;
    r.detail = "c2 route delta " + fmt(rep.c2_route_delta.convert_to<double>()) +
               (c2_ok ? " ok" : " FAIL") + "; c1/c2 Laurent " +
               fmt(rep.c1_over_c2.convert_to<double>()) + " vs printed expansion " +
               fmt(rep.c1_over_c2_by_display.convert_to<double>()) +
               (c1c2_ok ? " ok" : " FAIL (printed expansion disagrees with Laurent data)") +
               "; C identity delta " + fmt(rep.C_identity_delta.convert_to<double>()) +
               (c_ok ? " ok" : " FAIL") + "; tail bounds " + (tails_ok ? "ok" : "FAIL");
    return r;
}

CheckResult check_tauberian_fit(const Tolerances& tol) {
    CheckResult r{7, "partial-sum second-term fit", true, ""};
    u64 X = tol.tauberian_X;
    double band = tol.tauberian;
    CoefficientTable table;
    try {
        table = sieve_coefficients(X);
    } catch (const std::bad_alloc&) {
        X = tol.tauberian_X_fallback;
        band = tol.tauberian_fallback;
        table = sieve_coefficients(X);
    }
    double S = static_cast<double>(partial_sum(table, X));
    double c2 = c2_laurent(tol.prime_cutoff).convert_to<double>();
    double c1 = c1_laurent(tol.prime_cutoff).convert_to<double>();
    double lead = (c2 / 4) * X * std::log(static_cast<double>(X));
    double R = (S - lead) / X;
    double cand_standard = c1 / 2 - c2 / 4;
    double cand_printed = c1 / 2;
    bool near_standard = std::abs(R - cand_standard) <= band;
    bool near_printed = std::abs(R - cand_printed) <= band;
    bool second_ok = near_standard != near_printed;  // exactly one
    double ratio = S / lead;
    bool ratio_ok = ratio >= tol.ratio_lo && ratio <= tol.ratio_hi;
    r.pass = second_ok && ratio_ok;
    r.detail = "X=" + std::to_string(X) + ", R(X)=" + fmt(R) + "; candidates: standard " +
               fmt(cand_standard) + (near_standard ? " (matched)" : "") + ", printed " +
               fmt(cand_printed) + (near_printed ? " (matched)" : "") +
               "; leading-order ratio " + fmt(ratio) +
               (ratio_ok ? " in [0.9,1.1]" : " outside [0.9,1.1] FAIL (second-order term"
                                             " is still large at this X)");
    return r;
}

CheckResult check_cyclotomic(const Tolerances&) {
    CheckResult r{8, "cyclotomic parametrization properties", true, ""};
    const u64 h2 = 6001;
    i64 amin = -static_cast<i64>((h2 - 1) / 3);
    for (i64 a = 0; a >= amin && r.pass; --a) {
        for_each_family_at(a, [&](TraceOneCubic f, GaloisClass) {
            if (!r.pass) return;
            auto elems = elements_of(f);
            if (static_cast<int>(elems.size()) != weight(f)) {
                r.pass = false;
                r.detail = "element count != weight at " + to_string(f);
                return;
            }
            for (const CycloElement& e : elems) {
                auto [ca, cb] = to_cubic(e);
                if (ca != rational(f.a) || cb != rational(f.b)) {
                    r.pass = false;
                    r.detail = "roundtrip failed at " + to_string(f);
                    return;
                }
            }
            QuadraticData g = quadratic_of(f);
            rational dg = g.T * g.T - 4 * g.N;
            rational df(boost::multiprecision::cpp_int(to_string_i128(discriminant(f))));
            if (dg * g.N * g.N != -27 * df) {
                r.pass = false;
                r.detail = "discriminant relation failed at " + to_string(f);
            }
        });
    }
    if (!r.pass) return r;
    std::mt19937_64 rng(20260826);
    for (int i = 0; i < 10'000; ++i) {
        i64 un = static_cast<i64>(rng() % 61) - 30;
        i64 vn = static_cast<i64>(rng() % 61) - 30;
        i64 ud = static_cast<i64>(rng() % 12) + 1;
        i64 vd = static_cast<i64>(rng() % 12) + 1;
        CycloElement e{rational(un, ud), rational(vn, vd)};
        if (e.u == 0 && e.v == 0) continue;
        auto [ca, cb] = to_cubic(e);
        bool integral = denominator(ca) == 1 && denominator(cb) == 1;
        if (integral != is_integral_image(e)) {
            r.pass = false;
            r.detail = "integrality mismatch at u=" + to_string(e.u) + " v=" + to_string(e.v);
            return r;
        }
    }
    r.detail = "roundtrip, weights, discriminant relation and integrality all hold";
    return r;
}

CheckResult run_check(int id, const Tolerances& tol) {
    switch (id) {
        case 1: return check_table_reproduction(tol);
        case 2: return check_coefficient_oracle(tol);
        case 3: return check_exact_formula(tol);
        case 4: return check_coefficient_structure(tol);
        case 5: return check_reducible_counts(tol);
        case 6: return check_constants(tol);
        case 7: return check_tauberian_fit(tol);
        case 8: return check_cyclotomic(tol);
    }
    throw std::invalid_argument("run_check: id must be 1..8");
}

std::vector<int> suite_checks(const std::string& suite) {
    if (suite == "dn") return {2, 4, 7};
    if (suite == "thm12") return {3, 5};
    if (suite == "cyclo") return {1, 8};
    if (suite == "constants") return {6};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8};
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace abelia
