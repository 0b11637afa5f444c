#pragma once

#include <string>
#include <vector>

#include "abelia/arith.hpp"

namespace abelia {

// f = t^3 - t^2 + a t + b; the roots sum to 1 by construction.
struct TraceOneCubic {
    i64 a = 0;
    i64 b = 0;
    friend bool operator==(const TraceOneCubic&, const TraceOneCubic&) = default;
};

enum class GaloisClass {
    C3Irreducible,
    S3Irreducible,
    LinearTimesIrreducibleQuadratic,
    SplitDistinct,
    SplitDouble,
    SplitTriple,  // impossible for integer coefficients (triple root would be 1/3)
};

// -18ab + 4b + a^2 - 4a^3 - 27b^2
i128 discriminant(TraceOneCubic f);

// All integer roots with multiplicity, ascending; empty means irreducible
// over Q (monic cubic, so rational roots are integers dividing b).
std::vector<i64> integer_roots(TraceOneCubic f);

// Exact, integer-arithmetic classification. An irreducible cubic has cyclic
// Galois group iff its discriminant is a positive perfect square.
GaloisClass classify(TraceOneCubic f);

// C3Irreducible, SplitDistinct or SplitDouble.
bool in_family(TraceOneCubic f);

// 1 for a double root, 2 otherwise; rejects polynomials outside the family.
int weight(TraceOneCubic f);

// 1 - 3a; rejects a > 0 (family polynomials have a <= 0).
i64 toric_height_squared(TraceOneCubic f);

// max(|a|^(1/2), |b|^(1/3))
double root_height(TraceOneCubic f);

std::string to_string(TraceOneCubic f);
std::string to_string(GaloisClass c);

}  // namespace abelia
