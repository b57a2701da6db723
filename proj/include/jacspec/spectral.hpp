#pragma once

// Generic Jacobi spectral engine.  A model supplies the entries lambda_k, w_k
// and a gamma_k^2 sequence with gamma_k gamma_{k+1} = w_k; everything else --
// characteristic polynomial, the xi_k components, the characteristic function,
// real-line root search, eigenvectors and residuals -- is built from the
// characteristic functional F, with an independent Sturm-sequence bisection
// oracle for truncated matrices on the side.
//
// Core identities in play:
//   det(J_n - z) = prod_k (lambda_k - z) * F(gamma_1^2/(lambda_1-z), ...)
//   xi_k(z) = (prod_{l<=k} w_{l-1}/(z-lambda_l)) F({gamma_l^2/(lambda_l-z)}_{l>k}),
//             w_0 := 1
//   spec(J) \ der(lambda) = zeros of xi_0
//   ||xi(z)||^2 = xi_0'(z) xi_1(z) at a real simple eigenvalue.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacspec/ffunc.hpp"
#include "jacspec/types.hpp"

namespace jacspec {

enum class Side { unilateral, bilateral };

// A Jacobi family.  Callbacks use the mathematical indexing: k >= 1 for
// unilateral models, k in Z for bilateral ones.  Optional closed forms, when
// present, take precedence over the generic F-based routes.
//
// closed_eigvec(z, k) is one consistently normalized analytic family: member
// k >= 1 are eigenvector components, member k = 0 is the characteristic
// member whose zeros are the eigenvalues; eigvec_w0 is the coefficient
// coupling member 0 into the k = 1 recurrence row (1 for the canonical xi
// normalization).
struct JacobiModel {
    Side side = Side::unilateral;
    std::function<Cplx(std::int64_t)> lambda;
    std::function<Cplx(std::int64_t)> w;
    std::function<Cplx(std::int64_t)> gamma_sq;

    bool tail_convergent = true;      // condition sum |w_n^2/((l_n-z)(l_{n+1}-z))| < inf
    bool essential_zero = false;      // der(lambda) = {0}: keep a margin around 0
    bool char_poles_at_lambda = false; // char function has poles at z = lambda_n

    std::function<Cplx(Cplx)> closed_char;
    std::function<Cplx(Cplx, std::int64_t)> closed_eigvec;
    double eigvec_w0 = 1.0;
    std::function<std::vector<double>(double, double)> closed_spectrum;

    std::string name;
    std::map<std::string, double> params;
};

struct EigenEntry {
    Cplx z;
    std::optional<std::array<double, 2>> bracket;
    double residual = 0.0;
};

enum class SpectralMethod { char_zero, oracle };

std::string to_string(SpectralMethod m);

struct SpectralResult {
    std::vector<EigenEntry> eigenvalues; // sorted ascending by real part
    SpectralMethod method = SpectralMethod::char_zero;
    std::map<std::string, double> params;
    std::vector<std::string> notes; // per-root refinement failures etc.
};

// det(J_n - z I_n) through the F factorization; falls back to the plain
// three-term determinant recurrence whenever z collides with a diagonal entry.
Cplx charpoly(const JacobiModel& model, long n, Cplx z);

// xi_0(z) .. xi_kmax(z) for a unilateral model satisfying the tail
// convergence condition.  All tails share one truncation window, so the
// returned components satisfy the three-term recurrence to machine precision.
// Throws PoleError when z is numerically indistinguishable from some
// lambda_n, DomainError when the model violates the convergence condition.
std::vector<Cplx> xi(const JacobiModel& model, Cplx z, long k_max, double tol);

// Finite-section analogue: xi_k^(n) for k = 1..n,
//   xi_k^(n) = (-1)^{k-1} (prod_{j<k} w_j)(prod_{j>k} (lambda_j - z))
//              F({gamma_j^2/(lambda_j - z)}_{j=k+1}^n),
// an (unnormalized) eigenvector of the n x n truncation when z is one of its
// eigenvalues.
std::vector<Cplx> finite_xi(const JacobiModel& model, long n, Cplx z);

// Characteristic function: closed form when available, otherwise xi_0.
Cplx char_function(const JacobiModel& model, Cplx z,
                   const ToleranceConfig& cfg = {});

// Weyl m-function m(z) = xi_1(z)/xi_0(z), exposed as a derived quantity only.
Cplx weyl_m(const JacobiModel& model, Cplx z, const ToleranceConfig& cfg = {});

// Truncated symmetric window of a real model, ready for sym_tridiag_eigen.
// Unilateral: rows 1..N.  Bilateral: rows -N..N re-indexed from 0, with
// index0 recording the mathematical index of row 0.
struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;
    std::int64_t index0 = 1;
};

Tridiag truncate(const JacobiModel& model, long N);

// Number of eigenvalues of the symmetric tridiagonal matrix that are < t
// (Sturm sequence / LDL^T pivot count).
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double t);

// All eigenvalues of a real symmetric tridiagonal matrix by Sturm-sequence
// bisection, ascending.  Independent of the F-based determinant path.
// Bisection stops at width max(abs_tol, a few ulps of the local magnitude).
std::vector<double> sym_tridiag_eigen(const std::vector<double>& diag,
                                      const std::vector<double>& off, double abs_tol = 1e-12);

// Eigenvector components at an (approximate) eigenvalue, unit norm.
// Unilateral: components k = 1..k_max.  Bilateral: k = -k_max..k_max.
// Uses the model's closed family when available, the generic F route
// otherwise.  Throws DomainError if the vector is numerically null.
std::vector<Cplx> eigenvector(const JacobiModel& model, Cplx z, long k_max,
                              const ToleranceConfig& cfg = {});

// ||(J_K - z) v|| / ||v|| over the truncation that produced v, dropping the
// boundary rows that see outside the window (row 1 is kept for unilateral
// models since the operator has no row coupling to index 0).
double eigen_residual(const JacobiModel& model, Cplx z, const std::vector<Cplx>& v);

// The norm identity ||xi(z)||^2 = xi_0'(z) xi_1(z) at a real simple
// eigenvalue of a real model: returns (sum_k |u_k(z)|^2, w0 * central
// difference of u_0 at step h * u_1(z)) for the model's analytic family u.
std::pair<double, double> norm_identity_check(const JacobiModel& model, double z, double h,
                                              const ToleranceConfig& cfg = {});

// Scan [lo, hi] for real zeros of the characteristic function: grid seeded by
// a coarse truncated-matrix oracle plus a uniform backstop, sign-change
// bracketing, bisection refinement, pole-bracket rejection, deduplication,
// and an eigenvector residual attached to every accepted root.
SpectralResult find_real_eigenvalues(const JacobiModel& model, double lo, double hi,
                                     const ToleranceConfig& cfg = {});

} // namespace jacspec
