#include "abelia/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace abelia {

namespace {

i128 eval(TraceOneCubic f, i64 t) {
    return ((i128(t) - 1) * t + f.a) * t + f.b;
}

// roots of t^2 + p t + q, if both are integers
std::vector<i64> quadratic_integer_roots(i64 p, i64 q) {
    i128 d = i128(p) * p - 4 * i128(q);
    if (d < 0) return {};
    auto s = sqrt_if_square(u128(d));
    if (!s) return {};
    i64 sr = static_cast<i64>(*s);
    // p^2 - d = 4q, so sr and p share parity whenever d is a square
    i64 r1 = (-p - sr) / 2, r2 = (-p + sr) / 2;
    return {r1, r2};
}

}  // namespace

i128 discriminant(TraceOneCubic f) {
    i128 a = f.a, b = f.b;
    return -18 * a * b + 4 * b + a * a - 4 * a * a * a - 27 * b * b;
}

std::vector<i64> integer_roots(TraceOneCubic f) {
    i64 r = 0;
    bool found = false;
    if (f.b == 0) {
        r = 0;
        found = true;
    } else {
        for (u64 d : divisors(factorize(static_cast<u64>(f.b < 0 ? -f.b : f.b)))) {
            i64 cand = static_cast<i64>(d);
            if (eval(f, cand) == 0) {
                r = cand;
                found = true;
                break;
            }
            if (eval(f, -cand) == 0) {
                r = -cand;
                found = true;
                break;
            }
        }
    }
    if (!found) return {};
    // deflate: f = (t - r)(t^2 + (r-1) t + (r^2 - r + a))
    std::vector<i64> roots{r};
    for (i64 q : quadratic_integer_roots(r - 1, f.a + r * (r - 1))) roots.push_back(q);
    std::sort(roots.begin(), roots.end());
    return roots;
}

GaloisClass classify(TraceOneCubic f) {
    auto roots = integer_roots(f);
    if (roots.empty()) {
        i128 d = discriminant(f);
        if (d > 0 && is_square(u128(d))) return GaloisClass::C3Irreducible;
        return GaloisClass::S3Irreducible;
    }
    if (roots.size() == 1) return GaloisClass::LinearTimesIrreducibleQuadratic;
    // monic: a single rational quadratic root forces both, so size is 3 here
    if (roots[0] == roots[2]) return GaloisClass::SplitTriple;
    if (roots[0] == roots[1] || roots[1] == roots[2]) return GaloisClass::SplitDouble;
    return GaloisClass::SplitDistinct;
}

bool in_family(TraceOneCubic f) {
    GaloisClass c = classify(f);
    return c == GaloisClass::C3Irreducible || c == GaloisClass::SplitDistinct ||
           c == GaloisClass::SplitDouble;
}

int weight(TraceOneCubic f) {
    GaloisClass c = classify(f);
    if (c == GaloisClass::SplitDouble) return 1;
    if (c == GaloisClass::C3Irreducible || c == GaloisClass::SplitDistinct) return 2;
    throw std::domain_error("weight: polynomial is not in the family");
}

i64 toric_height_squared(TraceOneCubic f) {
    if (f.a > 0) throw std::domain_error("toric_height_squared: requires a <= 0");
    return 1 - 3 * f.a;
}

double root_height(TraceOneCubic f) {
    double ha = std::sqrt(static_cast<double>(f.a < 0 ? -f.a : f.a));
    double hb = std::cbrt(static_cast<double>(f.b < 0 ? -f.b : f.b));
    return std::max(ha, hb);
}

std::string to_string(TraceOneCubic f) {
    std::string s = "t^3 - t^2";
    auto term = [&s](i64 c, const std::string& var) {
        if (c == 0) return;
        s += c < 0 ? " - " : " + ";
        i64 m = c < 0 ? -c : c;
        if (var.empty()) {
            s += std::to_string(m);
        } else {
            if (m != 1) s += std::to_string(m);
            s += var;
        }
    };
    term(f.a, "t");
    term(f.b, "");
    return s;
}

std::string to_string(GaloisClass c) {
    switch (c) {
        case GaloisClass::C3Irreducible: return "C3Irreducible";
        case GaloisClass::S3Irreducible: return "S3Irreducible";
        case GaloisClass::LinearTimesIrreducibleQuadratic:
            return "LinearTimesIrreducibleQuadratic";
        case GaloisClass::SplitDistinct: return "SplitDistinct";
        case GaloisClass::SplitDouble: return "SplitDouble";
        case GaloisClass::SplitTriple: return "SplitTriple";
    }
    return "?";
}

}  // namespace abelia
