#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abelia/cubic.hpp"

namespace abelia {

using rational = boost::multiprecision::cpp_rational;

// u + v*zeta, zeta a primitive cube root of unity; must be nonzero.
struct CycloElement {
    rational u;
    rational v;
    friend bool operator==(const CycloElement&, const CycloElement&) = default;
};

// g = t^2 - T t + N with the element and its conjugate as roots.
struct QuadraticData {
    rational T;
    rational N;
};

// The corrected convention reproduces the worked table of correspondences;
// the printed formulas (opposite sign on the b term, 1-27b in T) are mutually
// inverse too but contradict that table, so they are kept only for comparison.
enum class SignConvention { Corrected, Printed };

// (N, T) = (u^2 + v^2 - uv, 2u - v); rejects the zero element.
std::pair<rational, rational> norm_trace(const CycloElement& e);

// (uu' - vv', uv' + vu' - vv'), via zeta^2 = -1 - zeta.
CycloElement multiply(const CycloElement& e, const CycloElement& f);

// (a, b) with a = (1-N)/3 and b = (N(3-T) - 1)/27 under Corrected.
std::pair<rational, rational> to_cubic(const CycloElement& e,
                                       SignConvention sc = SignConvention::Corrected);

// N = 1 - 3a, T = 3 - (1+27b)/(1-3a) under Corrected; rejects a = 1/3.
QuadraticData quadratic_of(const rational& a, const rational& b,
                           SignConvention sc = SignConvention::Corrected);
QuadraticData quadratic_of(TraceOneCubic f, SignConvention sc = SignConvention::Corrected);

// The one or two elements whose cubic is f; positive v first; rejects
// polynomials outside the family.
std::vector<CycloElement> elements_of(TraceOneCubic f);

// N in 1+3Z and N(3-T) in 1+27Z; equivalent to to_cubic having integer
// coordinates.
bool is_integral_image(const CycloElement& e);

double height(const CycloElement& e);  // sqrt of the norm

std::string to_string(const rational& r);        // exact, e.g. "-20/7"
std::string quadratic_string(const QuadraticData& g);  // e.g. "t^2 + t + 7"

}  // namespace abelia
