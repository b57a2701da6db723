#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace jacspec {

using Cplx = std::complex<double>;

// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A parameter sits on (or numerically too close to) a pole of the function.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A series, product or window did not converge within the configured budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stopping control for infinite series and products.
// A series terminates once |term| < tol * |partial sum| holds for three
// consecutive terms; max_terms is a hard cap.
struct SeriesControl {
    double tol = 1e-15;
    long max_terms = 1'000'000;
};

// Tolerances shared by the spectral engine.
//   work_tol     - working precision for internal truncations and guards
//   root_tol     - absolute bisection width for refined eigenvalues
//   scan_points  - uniform backstop grid size for the real-line root scan
//   truncation_N - default truncated-matrix order for oracles and residuals
struct ToleranceConfig {
    double work_tol = 1e-14;
    double root_tol = 1e-10;
    int scan_points = 512;
    int truncation_N = 200;
};

inline bool near_nonpositive_integer(const Cplx& z, double tol = 1e-13) {
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

} // namespace jacspec
