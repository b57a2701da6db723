#pragma once

// The four explicitly solvable Jacobi families, wired into JacobiModel with
// their closed-form characteristic functions and eigenvector families.

#include "jacspec/spectral.hpp"
#include "jacspec/types.hpp"

namespace jacspec {

// Deformation parameter 0 < q < 1, capped at 0.999 so that q-product
// truncations stay affordable.
struct QParam {
    double value;
    explicit QParam(double q) : value(q) {
        if (!(q > 0.0 && q <= 0.999))
            throw DomainError("QParam: q must lie in (0, 0.999]");
    }
};

// lambda_k = nu/((mu+k-1)(mu+k)), w_k = w(mu+k, nu); Hilbert-Schmidt, the
// characteristic function is a regular Coulomb wave function of z^{-1}.
struct CoulombParams {
    double mu;
    double nu;
};

// lambda_k = gamma k, w_k = sqrt(alpha + beta k); unbounded, characteristic
// function built from Kummer 1F1 (the tail convergence condition fails for
// this family, so only closed forms and finite sections apply).
struct ConfluentParams {
    double alpha;
    double beta;
    double gamma;
};

// Bilateral model w_n = q^{n/2} beta, lambda_n = q^n with point spectrum
// (-beta^2 q^{Z+}) u q^Z.
struct QBesselParams {
    double beta;
    double q;
};

// Unilateral model w_n = (1/2) sinh(sigma) q^{(n-gamma-1)/2} sqrt(1-q^{n+gamma}),
// lambda_n = q^{n-1}; characteristic function is a q-confluent 1phi1.
struct QConfluentParams {
    double sigma;
    double gamma;
    double q;
};

JacobiModel coulomb_model(const CoulombParams& p);
JacobiModel confluent_model(const ConfluentParams& p);
JacobiModel qbessel_model(const QBesselParams& p);
JacobiModel qconfluent_model(const QConfluentParams& p);

// Closed finite-n characteristic polynomial of the confluent family,
// det(J_n(alpha,beta,gamma) - z), expressed through four 1F1 factors; must
// agree with charpoly() on the same truncation.
Cplx confluent_finite_charpoly(const ConfluentParams& p, long n, Cplx z);

// Closed eigenvector component k (1 <= k <= n+1) of the n x n truncation at
// eigenvalue z; the k = n+1 extension vanishes identically.
Cplx confluent_finite_eigvec_at(const ConfluentParams& p, long n, Cplx z, long k);

// Components k = 1..n at an eigenvalue z of the n x n truncation.
std::vector<Cplx> confluent_finite_eigvec(const ConfluentParams& p, long n, Cplx z);

// ||v_m^+||^2 = (-q^{-m} beta^2; q)_inf, the closed normalization of the
// positive-eigenvalue q-Bessel eigenvectors.
double qbessel_vplus_norm_sq(const QBesselParams& p, long m);

} // namespace jacspec
