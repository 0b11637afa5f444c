// abelia: counting engine for monic trace-one integral cubics with cyclic
// Galois group. JSON-lines by default, CSV opt-in; exact rationals as strings.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelia/constants.hpp"
#include "abelia/counting.hpp"
#include "abelia/cubic.hpp"
#include "abelia/cyclo.hpp"
#include "abelia/dirichlet.hpp"
#include "abelia/enumerate.hpp"
#include "abelia/verify.hpp"

using json = nlohmann::ordered_json;
using namespace abelia;

namespace {

std::string real_str(const real50& v) {
    std::ostringstream os;
    os.precision(25);
    os << v;
    return os.str();
}

// cache path resolution: explicit flag wins, else ABELIA_CACHE_DIR
std::optional<std::string> cache_path(const std::string& flag, u64 limit) {
    if (!flag.empty()) return flag;
    if (const char* dir = std::getenv("ABELIA_CACHE_DIR")) {
        return std::string(dir) + "/coefficients-" + std::to_string(limit) + ".bin";
    }
    return std::nullopt;
}

CoefficientTable table_for(u64 limit, int threads, const std::string& cache_flag) {
    auto path = cache_path(cache_flag, limit);
    if (path) {
        if (auto t = load_table(*path); t && t->limit >= limit) return std::move(*t);
    }
    CoefficientTable t = sieve_coefficients(limit, threads);
    if (path) {
        try {
            save_table(t, *path);
        } catch (const std::exception& e) {
            std::cerr << "warning: could not write cache: " << e.what() << "\n";
        }
    }
    return t;
}

rational parse_rational(const std::string& s) {
    try {
        return rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected a comma-separated pair, got '" + s + "'");
    return {s.substr(0, comma), s.substr(comma + 1)};
}

json element_json(const CycloElement& e) {
    return json{{"u", to_string(e.u)}, {"v", to_string(e.v)}};
}

json cubic_record(const rational& a, const rational& b) {
    json rec;
    rec["a"] = to_string(a);
    rec["b"] = to_string(b);
    bool integral = denominator(a) == 1 && denominator(b) == 1;
    rec["integral"] = integral;
    QuadraticData g = quadratic_of(a, b);
    rec["g"] = quadratic_string(g);
    rec["T"] = to_string(g.T);
    rec["N"] = to_string(g.N);
    rec["disc_g"] = to_string(g.T * g.T - 4 * g.N);
    if (integral) {
        TraceOneCubic f{a.convert_to<i64>(), b.convert_to<i64>()};
        rec["f"] = to_string(f);
        rec["disc_f"] = to_string_i128(discriminant(f));
        rec["class"] = to_string(classify(f));
        if (in_family(f)) {
            rec["weight"] = weight(f);
            rec["toric_height_squared"] = toric_height_squared(f);
            json elems = json::array();
            for (const CycloElement& e : elements_of(f)) elems.push_back(element_json(e));
            rec["elements"] = elems;
        }
    }
    return rec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting engine for trace-one cubics with cyclic Galois group"};
    app.require_subcommand(1);

    std::string format = "json";
    u64 limit = 0;
    double height = 0;
    i64 per_a = 0;
    u64 prime_cutoff = kDefaultPrimeCutoff;
    int threads = 1;
    std::string cache_flag, tolerance_profile_name = "default";

    auto* coeffs = app.add_subcommand("coeffs", "emit coefficients d_1..d_N");
    coeffs->add_option("--limit", limit, "table limit N")->required();
    coeffs->add_option("--format", format, "json or csv");
    coeffs->add_option("--threads", threads, "sieve worker count");
    coeffs->add_option("--cache", cache_flag, "coefficient table cache file");

    auto* sum = app.add_subcommand("sum", "partial sum with main-term comparison");
    sum->add_option("--limit", limit, "sum bound X")->required();
    sum->add_option("--prime-cutoff", prime_cutoff, "Euler product cutoff");
    sum->add_option("--threads", threads, "sieve worker count");
    sum->add_option("--cache", cache_flag, "coefficient table cache file");

    auto* count = app.add_subcommand("count", "cyclic-cubic counts");
    auto* opt_pa = count->add_option("--per-a", per_a, "exact count at one a <= 0");
    auto* opt_toric = count->add_option("--toric", height, "count with toric height <= H");
    auto* opt_rh = count->add_option("--root-height", height, "count with root height <= H");
    count->add_option("--threads", threads, "worker count");
    opt_pa->excludes(opt_toric)->excludes(opt_rh);
    opt_toric->excludes(opt_rh);

    auto* consts = app.add_subcommand("constants", "leading-constant report");
    consts->add_option("--prime-cutoff", prime_cutoff, "Euler product cutoff");

    auto* reducible = app.add_subcommand("reducible", "reducible census and asymptotic");
    reducible->add_option("--height", height, "toric height bound H")->required();

    std::string cubic_arg, element_arg;
    auto* param = app.add_subcommand("param", "cubic <-> quadratic <-> element");
    auto* opt_cubic = param->add_option("--cubic", cubic_arg, "a,b");
    auto* opt_elem = param->add_option("--element", element_arg, "u,v (rationals)");
    opt_cubic->excludes(opt_elem);

    std::vector<u64> heights;
    auto* tablecmd = app.add_subcommand("table", "correspondence rows at given heights^2");
    tablecmd->add_option("--heights", heights, "height-squared values n (n = 1 mod 3)")
        ->required()
        ->delimiter(',');

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "dn, thm12, cyclo, constants or all");
    verify->add_option("--tolerance-profile", tolerance_profile_name, "default or loose");
    verify->add_option("--threads", threads, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*coeffs) {
            CoefficientTable t = table_for(limit, threads, cache_flag);
            if (format == "csv") {
                std::cout << "n,d\n";
                for (u64 n = 1; n <= limit; ++n) std::cout << n << "," << t.values[n] << "\n";
            } else {
                for (u64 n = 1; n <= limit; ++n)
                    std::cout << json{{"n", n}, {"d", t.values[n]}} << "\n";
            }
        } else if (*sum) {
            CoefficientTable t = table_for(limit, threads, cache_flag);
            u64 s = partial_sum(t, limit);
            double c2 = c2_laurent(prime_cutoff).convert_to<double>();
            double c1 = c1_laurent(prime_cutoff).convert_to<double>();
            double x = static_cast<double>(limit);
            json rec;
            rec["X"] = limit;
            rec["partial_sum"] = s;
            rec["main_term_standard"] = main_term(x, c2, c1, false);
            rec["main_term_printed"] = main_term(x, c2, c1, true);
            rec["R"] = (s - (c2 / 4) * x * std::log(x)) / x;
            rec["c2"] = c2;
            rec["c1"] = c1;
            std::cout << rec << "\n";
        } else if (*count) {
            json rec;
            if (opt_pa->count()) {
                rec["a"] = per_a;
                rec["count"] = c3_count_for_a(per_a);
            } else if (opt_toric->count()) {
                ReducibleCensus census = reducible_census(height);
                CoefficientTable t = sieve_coefficients(census.h2, threads);
                rec["height"] = height;
                rec["count"] = fast_c3_count_toric(census.h2, t, census);
            } else if (opt_rh->count()) {
                rec["height"] = height;
                rec["count"] = count_c3_root_height(height);
            } else {
                std::cerr << "count: one of --per-a, --toric, --root-height is required\n";
                return 2;
            }
            std::cout << rec << "\n";
        } else if (*consts) {
            ConstantsReport r = constants_report(prime_cutoff);
            json rec;
            rec["prime_cutoff"] = r.prime_cutoff;
            rec["gamma"] = real_str(r.gamma_euler);
            rec["L1_chi"] = real_str(r.L1);
            rec["Lprime1_chi"] = real_str(r.Lprime1);
            rec["E2"] = {{"value", real_str(r.E2.value)},
                         {"tail_bound", real_str(r.E2.tail_bound)}};
            rec["Eprime2"] = {{"value", real_str(r.Eprime2.value)},
                              {"tail_bound", real_str(r.Eprime2.tail_bound)}};
            rec["c2"] = real_str(r.c2);
            rec["c2_by_display"] = real_str(r.c2_by_display);
            rec["c2_route_delta"] = real_str(r.c2_route_delta);
            rec["c1"] = real_str(r.c1);
            rec["c1_over_c2"] = real_str(r.c1_over_c2);
            rec["c1_over_c2_by_display"] = real_str(r.c1_over_c2_by_display);
            rec["c1_over_c2_route_delta"] = real_str(r.c1_over_c2_route_delta);
            rec["C"] = real_str(r.C);
            rec["D_standard"] = real_str(r.D_standard);
            rec["D_by_display"] = real_str(r.D_by_display);
            std::cout << rec << "\n";
        } else if (*reducible) {
            ReducibleCensus c = reducible_census(height);
            json rec;
            rec["height"] = height;
            rec["height_squared"] = c.h2;
            rec["count_disc_zero"] = c.count_disc_zero;
            rec["count_disc_nonzero"] = c.count_disc_nonzero;
            rec["stabilized_points"] = stabilized_point_count(height);
            rec["asymptotic"] = reducible_asymptotic(height);
            std::cout << rec << "\n";
        } else if (*param) {
            if (opt_cubic->count()) {
                auto [as, bs] = split_pair(cubic_arg);
                std::cout << cubic_record(parse_rational(as), parse_rational(bs)) << "\n";
            } else if (opt_elem->count()) {
                auto [us, vs] = split_pair(element_arg);
                CycloElement e{parse_rational(us), parse_rational(vs)};
                auto [n, t] = norm_trace(e);
                auto [a, b] = to_cubic(e);
                json rec;
                rec["u"] = to_string(e.u);
                rec["v"] = to_string(e.v);
                rec["N"] = to_string(n);
                rec["T"] = to_string(t);
                rec["integral_image"] = is_integral_image(e);
                rec["cubic"] = cubic_record(a, b);
                std::cout << rec << "\n";
            } else {
                std::cerr << "param: one of --cubic, --element is required\n";
                return 2;
            }
        } else if (*tablecmd) {
            for (u64 n : heights) {
                if (n % 3 != 1) {
                    std::cerr << "table: height squared must be 1 mod 3, got "
                              << n << "\n";
                    return 2;
                }
                i64 a = -static_cast<i64>((n - 1) / 3);
                for_each_family_at(a, [&](TraceOneCubic f, GaloisClass) {
                    json rec = cubic_record(rational(f.a), rational(f.b));
                    rec["height_squared"] = n;
                    std::cout << rec << "\n";
                });
            }
        } else if (*verify) {
            Tolerances tol = tolerance_profile(tolerance_profile_name);
            bool all_pass = true;
            for (int id : suite_checks(suite)) {
                CheckResult r = run_check(id, tol);
                all_pass = all_pass && r.pass;
                std::cout << json{{"check", r.id},
                                  {"name", r.name},
                                  {"pass", r.pass},
                                  {"detail", r.detail}}
                          << "\n";
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
