#pragma once

#include <functional>
#include <vector>

#include "abelia/counting.hpp"
#include "abelia/cubic.hpp"
#include "abelia/dirichlet.hpp"

namespace abelia {

// Largest |b| a family polynomial with this a can have:
// floor(((1-2a)/3)^(3/2)), from AM-GM on the (real) root triple.
u64 b_bound(i64 a);

// Streams every family polynomial with the given a (|b| <= b_bound(a)),
// cheap discriminant/square filters first, full classification only on
// survivors.
void for_each_family_at(i64 a, const std::function<void(TraceOneCubic, GaloisClass)>& fn);

// Exact count of b with classify((a,b)) = C3Irreducible.
u64 brute_c3_count_for_a(i64 a);

// w[n] = sum of weight(f) over family polynomials with 1-3a = n <= h2.
std::vector<u64> weighted_count_by_height(u64 h2, int threads = 1);

// (partial_sum(H^2) - #(disc zero) - 2 #(disc nonzero)) / 2; the halving must
// be exact (failure is a hard error).
u64 fast_c3_count_toric(u64 h2, const CoefficientTable& table, const ReducibleCensus& census);

// C3 polynomials with max(|a|^(1/2), |b|^(1/3)) <= H, direct scan; H <= 50.
u64 count_c3_root_height(double H);

}  // namespace abelia
