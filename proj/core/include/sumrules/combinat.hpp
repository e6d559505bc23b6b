#pragma once

// Base sequences of enumerative combinatorics, computed exactly.
//
// Every sequence is memoized row by row in a process-wide TriangleCache, and
// most carry a second, independent computation path used for cross-checks:
//
//   derangement              Euler recurrence      | alternating sum
//   stirling2                explicit alternating  | two-term recurrence
//   stirling1_signed         recurrence            | falling_factorial_poly
//
// All functions are thread-safe.

#include "sumrules/bigint.hpp"
#include "sumrules/polynomial.hpp"

#include <span>

namespace sumrules {

Nat factorial(unsigned n);

/// C(n, k); zero when k > n.
Nat binomial(unsigned long n, unsigned long k);

/// Binomial with a possibly negative upper index, C(-a, k) = (-1)^k C(a+k-1, k);
/// zero for k < 0.
Int binomial_signed(long n, long k);

/// d_n via the Euler recurrence d_n = (n-1)(d_{n-1} + d_{n-2}), d_0 = 1, d_1 = 0.
Nat derangement(unsigned n);

/// d_n = n! * sum_{i<=n} (-1)^i / i!, evaluated in integers as sum (-1)^i n!/i!.
Nat derangement_alternating_sum(unsigned n);

/// p_n(k) = C(n,k) d_{n-k}: permutations of n elements with exactly k fixed points.
Nat rencontres(unsigned n, unsigned k);

/// Signed Stirling number of the first kind from
/// s(q+1,k) = s(q,k-1) - q s(q,k), s(0,0) = 1, s(q,0) = s(0,q) = 0 for q >= 1.
Int stirling1_signed(unsigned q, unsigned k);
/// Row q of the signed triangle, indices 0..q.
std::span<const Int> stirling1_row(unsigned q);

/// Stirling number of the second kind via (1/k!) sum_j (-1)^{k-j} C(k,j) j^q.
Nat stirling2(unsigned q, unsigned k);
std::span<const Nat> stirling2_row(unsigned q);

/// Cross-check path: S(q,k) = k S(q-1,k) + S(q-1,k-1).
Nat stirling2_recurrence(unsigned q, unsigned k);

/// B_q = sum_{k=0}^{q} S(q,k).
Nat bell(unsigned q);

/// sum_{k=0}^{upper} S(q,k); equals bell(q) for every upper >= q.
Nat bell_partial(unsigned q, unsigned upper);

/// Eulerian number <i j>: permutations of i elements with j ascents.
Nat eulerian(unsigned i, unsigned j);
std::span<const Nat> eulerian_row(unsigned i);

/// Coefficients of x(x-1)...(x-q+1).
IntPolynomial falling_factorial_poly(unsigned q);

/// Coefficients of x(x+1)...(x+n-1).
IntPolynomial rising_factorial_poly(unsigned n);

/// k(k-1)...(k-m+1) for integer k, m factors; 1 when m = 0.
Int falling_factorial(long k, unsigned m);

}  // namespace sumrules
