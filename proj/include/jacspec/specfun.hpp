#pragma once

// Classical and q-deformed special-function kernels: the complex log-gamma,
// Kummer's 1F1 (plain and 1/Gamma(b)-regularized), Tricomi's U, regular
// Coulomb wave functions, Bessel J, and the q-side building blocks
// (q-Pochhammer symbols, 0phi1, 1phi1, the rescaled second Jackson q-Bessel
// function).  All series use ascending-term evaluation with the stopping rule
// from SeriesControl; every fractional power takes the principal branch.

#include "jacspec/types.hpp"

namespace jacspec {

// Principal-branch log Gamma(z); throws PoleError at nonpositive integers.
// Ratios Gamma(a)/Gamma(b) should always be formed as exp(log_gamma(a) -
// log_gamma(b)); any 2*pi*i ambiguity cancels under exp.
Cplx log_gamma(Cplx z);

// Gamma(z) = exp(log_gamma(z)).
Cplx gamma_fn(Cplx z);

// 1/Gamma(z), entire; returns 0 at the poles of Gamma.
Cplx recip_gamma(Cplx z);

// Gamma(a)/Gamma(b) in log space; returns 0 when b is a pole of Gamma.
Cplx gamma_ratio(Cplx a, Cplx b);

// Kummer's confluent hypergeometric 1F1(a;b;z) by ascending series.
// Throws PoleError for b in {0,-1,-2,...}.
Cplx hyp1f1(Cplx a, Cplx b, Cplx z, const SeriesControl& ctl = {});

// Regularized Kummer function 1F1(a;b;z)/Gamma(b) = sum_k (a)_k z^k /
// (k! Gamma(b+k)), entire in b.
Cplx hyp1f1_regularized(Cplx a, Cplx b, Cplx z, const SeriesControl& ctl = {});

// Tricomi's U(a,b,z) assembled from two 1F1 terms,
//   U = Gamma(1-b)/Gamma(a-b+1) 1F1(a;b;z)
//     + Gamma(b-1)/Gamma(a) z^{1-b} 1F1(a-b+1;2-b;z),
// valid for noninteger b; throws PoleError when b is (numerically) an
// integer or z = 0.
Cplx tricomi_u(Cplx a, Cplx b, Cplx z, const SeriesControl& ctl = {});

// The oscillation-free Kummer kernel
//   K(m,v,x) = e^{-ix} 1F1(m+iv; 2m; 2ix)
// evaluated through its real-coefficient power series sum_j b_j x^j with
//   b_0 = 1,  b_1 = -v/m,  j(j+2m-1) b_j = -2v b_{j-1} - b_{j-2}.
// For real v and x the value is real; this is the numerically stable route
// to Coulomb wave functions (no e^{|x|}-sized cancellation of the complex
// 1F1 series).  Requires m > 0.
Cplx coulomb_kernel(double m, double v, Cplx x, const SeriesControl& ctl = {});

// Regular Coulomb wave function
//   F_L(eta,rho) = C_L(eta) rho^{L+1} e^{-i rho} 1F1(L+1-i eta; 2L+2; 2i rho),
//   C_L(eta)     = 2^L e^{-pi eta/2} |Gamma(L+1+i eta)| / Gamma(2L+2),
// for L > -1, real eta; principal branch of rho^{L+1}.
Cplx coulomb_f(double L, double eta, Cplx rho, const SeriesControl& ctl = {});

// Bessel function of the first kind by its ascending series; principal
// branch of (x/2)^nu, throws PoleError for nu in -N.
Cplx bessel_j(Cplx nu, Cplx x, const SeriesControl& ctl = {});

// q-Pochhammer symbol (a;q)_k = prod_{j<k} (1 - a q^j); empty product is 1.
Cplx poch_q(Cplx a, Cplx q, long k);

// (a;q)_infty for |q| < 1, truncated once |a| |q|^J < tol (1 - |q|).
Cplx poch_q_inf(Cplx a, Cplx q, const SeriesControl& ctl = {});

// Basic hypergeometric 0phi1(;b;q,z) = sum_k q^{k(k-1)} z^k / ((q;q)_k (b;q)_k).
// Converges for every z (|q| < 1); throws PoleError if some (b;q)_k vanishes.
Cplx phi01(Cplx b, Cplx q, Cplx z, const SeriesControl& ctl = {});

// q-confluent hypergeometric series
//   1phi1(a;b;q,z) = sum_k (-1)^k q^{k(k-1)/2} (a;q)_k z^k / ((b;q)_k (q;q)_k),
// the literal series argument z.  Throws PoleError if some (b;q)_k vanishes.
Cplx phi11(Cplx a, Cplx b, Cplx q, Cplx z, const SeriesControl& ctl = {});

// (b;q)_infty * 1phi1(a;b;q,z) evaluated in the entire form
//   sum_k (-1)^k q^{k(k-1)/2} (a;q)_k (b q^k;q)_infty z^k / (q;q)_k,
// which stays finite when b hits q^{-Z+} (the (b;q)_k poles cancel).
Cplx phi11_weighted(Cplx a, Cplx b, Cplx q, Cplx z, const SeriesControl& ctl = {});

// Rescaled second Jackson q-Bessel function
//   j_nu(x;q) = q^{nu(nu+1)/4} ((q^{nu+1};q)_inf/(q;q)_inf) (x/2)^nu
//               0phi1(;q^{nu+1};q,-q^{nu+3/2} x^2/4),
// with j_{-n} = (-1)^n j_n for integer n >= 1 handled by that reflection
// rather than a numeric limit.  Principal branch of (x/2)^nu; 0 < q < 1.
Cplx jfrak(Cplx nu, Cplx x, double q, const SeriesControl& ctl = {});

} // namespace jacspec
