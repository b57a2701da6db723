#include "jacspec/specfun.hpp"

#include <cmath>
#include <numbers>

namespace jacspec {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos approximation, g = 7, 9 coefficients.
constexpr int lanczos_g = 7;
constexpr double lanczos_p[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Cplx log_gamma_lanczos(Cplx z) {
    z -= 1.0;
    Cplx x = lanczos_p[0];
    for (int i = 1; i < lanczos_g + 2; ++i) x += lanczos_p[i] / (z + double(i));
    const Cplx t = z + (lanczos_g + 0.5);
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

bool stop_rule(const Cplx& term, const Cplx& sum, double tol, int& hits) {
    // inclusive comparison so that a fully underflowed series (term = sum = 0)
    // terminates and reports 0
    if (std::abs(term) <= tol * std::abs(sum))
        ++hits;
    else
        hits = 0;
    return hits >= 3;
}

} // namespace

Cplx log_gamma(Cplx z) {
    if (near_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at nonpositive integer argument");
    if (z.real() < 0.5) return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    return log_gamma_lanczos(z);
}

Cplx gamma_fn(Cplx z) { return std::exp(log_gamma(z)); }

Cplx recip_gamma(Cplx z) {
    if (z.real() < 0.5) return std::sin(pi * z) / pi * std::exp(log_gamma_lanczos(1.0 - z));
    return std::exp(-log_gamma_lanczos(z));
}

Cplx gamma_ratio(Cplx a, Cplx b) {
    const bool pa = near_nonpositive_integer(a);
    const bool pb = near_nonpositive_integer(b);
    if (pa && pb) throw PoleError("gamma_ratio: both arguments at poles");
    if (pa) throw PoleError("gamma_ratio: numerator pole");
    if (pb) return 0.0;
    return std::exp(log_gamma(a) - log_gamma(b));
}

Cplx hyp1f1(Cplx a, Cplx b, Cplx z, const SeriesControl& ctl) {
    if (near_nonpositive_integer(b, 1e-12))
        throw PoleError("hyp1f1: b is a nonpositive integer");
    Cplx term = 1.0, sum = 1.0;
    int hits = 0;
    for (long k = 0; k < ctl.max_terms; ++k) {
        term *= (a + double(k)) / (b + double(k)) * z / double(k + 1);
        sum += term;
        if (term == Cplx(0.0)) return sum; // terminating (polynomial) case
        if (stop_rule(term, sum, ctl.tol, hits)) return sum;
    }
    throw ConvergenceError("hyp1f1: series did not converge within max_terms");
}

Cplx hyp1f1_regularized(Cplx a, Cplx b, Cplx z, const SeriesControl& ctl) {
    // sum_k (a)_k z^k / (k! Gamma(b+k)); the first few terms may vanish or be
    // tiny when b+k crosses the poles of Gamma, so convergence testing only
    // starts beyond that zone.
    const long k_min = std::max(0L, long(std::ceil(-b.real())) + 2);
    Cplx core = 1.0; // (a)_k z^k / k!
    Cplx sum = recip_gamma(b);
    int hits = 0;
    for (long k = 0; k < ctl.max_terms; ++k) {
        core *= (a + double(k)) * z / double(k + 1);
        const Cplx term = core * recip_gamma(b + double(k + 1));
        sum += term;
        if (core == Cplx(0.0)) return sum;
        if (k >= k_min && stop_rule(term, sum, ctl.tol, hits)) return sum;
    }
    throw ConvergenceError("hyp1f1_regularized: series did not converge within max_terms");
}

Cplx tricomi_u(Cplx a, Cplx b, Cplx z, const SeriesControl& ctl) {
    const double br = std::round(b.real());
    if (std::abs(b.real() - br) < 1e-8 && std::abs(b.imag()) < 1e-8)
        throw PoleError("tricomi_u: integer b lies outside the two-term 1F1 representation");
    if (z == Cplx(0.0)) throw PoleError("tricomi_u: z must be nonzero");
    const Cplx first = gamma_ratio(1.0 - b, a - b + 1.0) * hyp1f1(a, b, z, ctl);
    const Cplx second =
        gamma_ratio(b - 1.0, a) * std::pow(z, 1.0 - b) * hyp1f1(a - b + 1.0, 2.0 - b, z, ctl);
    return first + second;
}

Cplx coulomb_kernel(double m, double v, Cplx x, const SeriesControl& ctl) {
    if (!(m > 0.0)) throw DomainError("coulomb_kernel: requires m > 0");
    if (x == Cplx(0.0)) return 1.0;
    double b2 = 1.0;      // b_{j-2}
    double b1 = -v / m;   // b_{j-1}
    Cplx xp = x;          // x^j
    Cplx sum = 1.0 + b1 * x;
    int hits = 0;
    for (long j = 2; j < ctl.max_terms; ++j) {
        const double bj = (-2.0 * v * b1 - b2) / (double(j) * (double(j) + 2.0 * m - 1.0));
        xp *= x;
        const Cplx term = bj * xp;
        sum += term;
        if (stop_rule(term, sum, ctl.tol, hits)) return sum;
        b2 = b1;
        b1 = bj;
    }
    throw ConvergenceError("coulomb_kernel: series did not converge within max_terms");
}

Cplx coulomb_f(double L, double eta, Cplx rho, const SeriesControl& ctl) {
    if (!(L > -1.0)) throw DomainError("coulomb_f: requires L > -1");
    const Cplx lg = log_gamma(Cplx(L + 1.0, eta));
    const double log_cl =
        L * std::log(2.0) - pi * eta / 2.0 + lg.real() - log_gamma(Cplx(2.0 * L + 2.0)).real();
    return std::exp(log_cl) * std::pow(rho, L + 1.0) * coulomb_kernel(L + 1.0, -eta, rho, ctl);
}

Cplx bessel_j(Cplx nu, Cplx x, const SeriesControl& ctl) {
    if (near_nonpositive_integer(nu + 1.0, 1e-12))
        throw PoleError("bessel_j: order is a negative integer");
    if (x == Cplx(0.0)) return nu == Cplx(0.0) ? 1.0 : 0.0;
    const Cplx h = 0.5 * x;
    Cplx term = std::exp(nu * std::log(h) - log_gamma(nu + 1.0));
    Cplx sum = term;
    const Cplx m = -h * h;
    int hits = 0;
    for (long k = 0; k < ctl.max_terms; ++k) {
        term *= m / (double(k + 1) * (nu + double(k + 1)));
        sum += term;
        if (stop_rule(term, sum, ctl.tol, hits)) return sum;
    }
    throw ConvergenceError("bessel_j: series did not converge within max_terms");
}

Cplx poch_q(Cplx a, Cplx q, long k) {
    if (k < 0) throw DomainError("poch_q: k must be >= 0");
    Cplx prod = 1.0, qp = 1.0;
    for (long j = 0; j < k; ++j) {
        prod *= 1.0 - a * qp;
        qp *= q;
    }
    return prod;
}

Cplx poch_q_inf(Cplx a, Cplx q, const SeriesControl& ctl) {
    const double qa = std::abs(q);
    if (!(qa < 1.0)) throw DomainError("poch_q_inf: requires |q| < 1");
    const double thr = ctl.tol * (1.0 - qa);
    Cplx prod = 1.0, aq = a;
    for (long j = 0; j < ctl.max_terms; ++j) {
        if (std::abs(aq) < thr) return prod;
        prod *= 1.0 - aq;
        aq *= q;
    }
    throw ConvergenceError("poch_q_inf: product did not converge within max_terms");
}

Cplx phi01(Cplx b, Cplx q, Cplx z, const SeriesControl& ctl) {
    if (!(std::abs(q) < 1.0)) throw DomainError("phi01: requires |q| < 1");
    Cplx term = 1.0, sum = 1.0, qp = 1.0, q2p = 1.0; // qp = q^k, q2p = q^{2k}
    int hits = 0;
    for (long k = 0; k < ctl.max_terms; ++k) {
        const Cplx fb = 1.0 - b * qp;
        if (std::abs(fb) < 1e-14 * (1.0 + std::abs(b * qp)))
            throw PoleError("phi01: vanishing (b;q)_k factor");
        term *= q2p * z / ((1.0 - q * qp) * fb);
        sum += term;
        if (stop_rule(term, sum, ctl.tol, hits)) return sum;
        qp *= q;
        q2p *= q * q;
    }
    throw ConvergenceError("phi01: series did not converge within max_terms");
}

Cplx phi11(Cplx a, Cplx b, Cplx q, Cplx z, const SeriesControl& ctl) {
    if (!(std::abs(q) < 1.0)) throw DomainError("phi11: requires |q| < 1");
    Cplx term = 1.0, sum = 1.0, qp = 1.0; // qp = q^k
    int hits = 0;
    for (long k = 0; k < ctl.max_terms; ++k) {
        const Cplx fb = 1.0 - b * qp;
        if (std::abs(fb) < 1e-14 * (1.0 + std::abs(b * qp)))
            throw PoleError("phi11: vanishing (b;q)_k factor");
        term *= -qp * (1.0 - a * qp) * z / (fb * (1.0 - q * qp));
        sum += term;
        if (term == Cplx(0.0)) return sum;
        if (stop_rule(term, sum, ctl.tol, hits)) return sum;
        qp *= q;
    }
    throw ConvergenceError("phi11: series did not converge within max_terms");
}

Cplx phi11_weighted(Cplx a, Cplx b, Cplx q, Cplx z, const SeriesControl& ctl) {
    if (!(std::abs(q) < 1.0)) throw DomainError("phi11_weighted: requires |q| < 1");
    // Leading terms may vanish when b q^k sweeps across 1; hold off the
    // convergence test until |b q^k| has dropped below ~1.
    long k_min = 0;
    if (std::abs(b) > 1.0) k_min = long(std::ceil(std::log(std::abs(b)) / -std::log(std::abs(q)))) + 2;
    Cplx core = 1.0; // (-1)^k q^{k(k-1)/2} (a;q)_k z^k / (q;q)_k
    Cplx qp = 1.0;   // q^k
    Cplx sum = poch_q_inf(b, q, ctl);
    int hits = 0;
    for (long k = 1; k < ctl.max_terms; ++k) {
        core *= -qp * (1.0 - a * qp) * z / (1.0 - q * qp);
        qp *= q;
        const Cplx term = core * poch_q_inf(b * qp, q, ctl);
        sum += term;
        if (core == Cplx(0.0)) return sum;
        if (k >= k_min && stop_rule(term, sum, ctl.tol, hits)) return sum;
    }
    throw ConvergenceError("phi11_weighted: series did not converge within max_terms");
}

namespace {

// (a;q)_inf / (b;q)_inf as a product of factor ratios; immune to the
// underflow of the individual products as q -> 1.
Cplx poch_q_inf_ratio(Cplx a, Cplx b, double q, const SeriesControl& ctl) {
    const double thr = ctl.tol * (1.0 - q);
    Cplx prod = 1.0, aq = a, bq = b;
    for (long j = 0; j < ctl.max_terms; ++j) {
        if (std::abs(aq) < thr && std::abs(bq) < thr) return prod;
        prod *= (1.0 - aq) / (1.0 - bq);
        aq *= q;
        bq *= q;
    }
    throw ConvergenceError("poch_q_inf_ratio: product did not converge within max_terms");
}

} // namespace

Cplx jfrak(Cplx nu, Cplx x, double q, const SeriesControl& ctl) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("jfrak: requires 0 < q < 1");
    const double nr = std::round(nu.real());
    if (std::abs(nu.imag()) < 1e-13 && std::abs(nu.real() - nr) < 1e-13 && nr < 0.0) {
        const long n = -long(nr);
        const Cplx v = jfrak(Cplx(double(n)), x, q, ctl);
        return (n % 2 == 0) ? v : -v;
    }
    const double lq = std::log(q);
    const Cplx qnu1 = std::exp((nu + 1.0) * lq);
    const Cplx pref = std::exp(nu * (nu + 1.0) / 4.0 * lq) * poch_q_inf_ratio(qnu1, q, q, ctl);
    const Cplx xh = 0.5 * x;
    Cplx power;
    if (xh == Cplx(0.0))
        power = nu == Cplx(0.0) ? Cplx(1.0) : Cplx(0.0);
    else
        power = std::pow(xh, nu);
    const Cplx arg = -std::exp((nu + 1.5) * lq) * xh * xh;
    return pref * power * phi01(qnu1, q, arg, ctl);
}

} // namespace jacspec
