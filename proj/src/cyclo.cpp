#include "abelia/cyclo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace abelia {

namespace {

using boost::multiprecision::cpp_int;

bool is_zero(const CycloElement& e) { return e.u == 0 && e.v == 0; }

bool integer_in_class(const rational& x, const cpp_int& offset, const cpp_int& mod) {
    if (denominator(x) != 1) return false;
    cpp_int r = (numerator(x) - offset) % mod;
    return r == 0;
}

}  // namespace

std::pair<rational, rational> norm_trace(const CycloElement& e) {
    if (is_zero(e)) throw std::invalid_argument("norm_trace: zero element");
    rational n = e.u * e.u + e.v * e.v - e.u * e.v;
    rational t = 2 * e.u - e.v;
    return {n, t};
}

CycloElement multiply(const CycloElement& e, const CycloElement& f) {
    return {e.u * f.u - e.v * f.v, e.u * f.v + e.v * f.u - e.v * f.v};
}

std::pair<rational, rational> to_cubic(const CycloElement& e, SignConvention sc) {
    auto [n, t] = norm_trace(e);
    rational a = (1 - n) / 3;
    rational b;
    if (sc == SignConvention::Corrected) {
        b = (n * (3 - t) - 1) / 27;
    } else {
        b = (1 + n * (t - 3)) / 27;
    }
    return {a, b};
}

QuadraticData quadratic_of(const rational& a, const rational& b, SignConvention sc) {
    rational n = 1 - 3 * a;
    if (n == 0) throw std::invalid_argument("quadratic_of: a = 1/3 has no parametrization");
    rational t;
    if (sc == SignConvention::Corrected) {
        t = 3 - (1 + 27 * b) / n;
    } else {
        t = 3 - (1 - 27 * b) / n;
    }
    return {t, n};
}

QuadraticData quadratic_of(TraceOneCubic f, SignConvention sc) {
    return quadratic_of(rational(f.a), rational(f.b), sc);
}

std::vector<CycloElement> elements_of(TraceOneCubic f) {
    if (!in_family(f)) throw std::domain_error("elements_of: polynomial is not in the family");
    auto [t, n] = quadratic_of(f);
    i128 disc = discriminant(f);  // nonnegative perfect square on the family
    auto root = sqrt_if_square(u128(disc));
    if (!root) throw std::logic_error("elements_of: family discriminant is not a square");
    rational s = rational(3 * cpp_int(static_cast<u64>(*root))) / n;
    if (s == 0) return {{t / 2, rational(0)}};
    return {{(t + s) / 2, s}, {(t - s) / 2, -s}};
}

bool is_integral_image(const CycloElement& e) {
    auto [n, t] = norm_trace(e);
    return integer_in_class(n, 1, 3) && integer_in_class(n * (3 - t), 1, 27);
}

double height(const CycloElement& e) {
    auto [n, t] = norm_trace(e);
    return std::sqrt(n.convert_to<double>());
}

std::string to_string(const rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string quadratic_string(const QuadraticData& g) {
    std::string s = "t^2";
    auto term = [&s](const rational& c, const std::string& var) {
        if (c == 0) return;
        s += c < 0 ? " - " : " + ";
        rational m = c < 0 ? rational(-c) : c;
        if (!var.empty() && m == 1) {
            s += var;
        } else {
            s += to_string(m);
            if (!var.empty() && denominator(m) != 1) s += ' ';  // "20/7 t"
            s += var;
        }
    };
    term(-g.T, "t");
    term(g.N, "");
    return s;
}

}  // namespace abelia
