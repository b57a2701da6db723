#pragma once

// The characteristic functional F of a complex sequence {x_k},
//
//   F(x) = 1 + sum_{m>=1} (-1)^m  sum_{k_1, k_2 >= k_1+2, ...}
//              x_{k_1} x_{k_1+1} ... x_{k_m} x_{k_m+1},
//
// defined whenever sum_k |x_k x_{k+1}| < infinity.  Finite sequences are
// identified with zero-padded infinite ones and F(empty) = 1.  The functional
// obeys the backward three-term rule
//
//   F({x_k}_{k=j}) = F({x_k}_{k=j+1}) - x_j x_{j+1} F({x_k}_{k=j+2}),
//
// which is the O(n) evaluation path used throughout; the literal nested sum
// stays available as an independent brute-force oracle.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "jacspec/types.hpp"

namespace jacspec {

// Finite sequence x_1..x_n (index 1 maps to element 0).
using FiniteSeq = std::vector<Cplx>;

// One-sided infinite tail {x_k}_{k>=k0}.  pair_sum_bound, when supplied, is
// (an upper bound on) the full tail pair sum  sum_{k>=k0} |x_k x_{k+1}|  and
// makes truncation windows exact rather than ratio-estimated.
struct TailSeq {
    std::function<Cplx(std::int64_t)> gen;
    std::int64_t k0 = 1;
    std::optional<double> pair_sum_bound{};
};

// Two-sided sequence {x_k}_{k in Z}.
struct BilateralSeq {
    std::function<Cplx(std::int64_t)> gen;
};

// F(x_1,...,x_n) by the backward recurrence, seeds F_{n+1} = F_{n+2} = 1.
Cplx f_finite(std::span<const Cplx> xs);
inline Cplx f_finite(const FiniteSeq& xs) { return f_finite(std::span<const Cplx>(xs)); }

// All suffix values F_j = F(x_j,...,x_n) for j = 1..n+1 from one backward
// sweep; slot j-1 of the result holds F_j, the final slot holds 1.
std::vector<Cplx> f_suffixes(std::span<const Cplx> xs);

// Literal nested-sum evaluation of the definition.  Cost grows roughly like
// Fibonacci(n); lengths above max_len are rejected.
Cplx f_bruteforce(std::span<const Cplx> xs, std::size_t max_len = 20);
inline Cplx f_bruteforce(const FiniteSeq& xs, std::size_t max_len = 20) {
    return f_bruteforce(std::span<const Cplx>(xs), max_len);
}

// sum |x_k x_{k+1}| over the finite range.
double pair_sum(std::span<const Cplx> xs);
inline double pair_sum(const FiniteSeq& xs) { return pair_sum(std::span<const Cplx>(xs)); }

// sum |x_k x_{k+1}| for k = k0 .. k0+horizon (horizon+1 consecutive pairs).
double pair_sum(const TailSeq& seq, std::int64_t horizon);

// F of an infinite tail.  The window [k0, M] is chosen so that the residual
// pair sum S_M = sum_{k>=M} |x_k x_{k+1}| satisfies exp(S_M) - 1 < tol, which
// majorizes every dropped term of the defining sum; the result is then within
// tol * exp(S_{k0}) of the true value.  Throws ConvergenceError if no such M
// exists below max_horizon.
Cplx f_tail(const TailSeq& seq, double tol, std::int64_t max_horizon = (1 << 24));

// F of a bilateral sequence via a symmetric window with the same exponential
// tail bound applied on each side.
Cplx f_bilateral(const BilateralSeq& seq, double tol, std::int64_t max_horizon = (1 << 24));

// Truncation point M for a tail: smallest index with estimated residual pair
// sum below log1p(tol).  Exposed for the spectral engine, which needs a
// common window for a whole family of suffix evaluations.
std::int64_t tail_window(const TailSeq& seq, double tol, std::int64_t max_horizon = (1 << 24));

} // namespace jacspec
