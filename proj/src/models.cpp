#include "jacspec/models.hpp"

#include <cmath>

#include "jacspec/specfun.hpp"

namespace jacspec {

namespace {

double coulomb_lambda(double x, double y) { return y / ((x - 1.0) * x); }

double coulomb_w(double x, double y) {
    return std::sqrt((x * x + y * y) / (4.0 * x * x - 1.0)) / x;
}

// gamma(x,y)^2 with gamma(x,y) = Gamma(x/2)/(sqrt(2x-1) Gamma((x+1)/2)) *
// |Gamma((x+1+iy)/2) / Gamma((x+iy)/2)|
double coulomb_gamma_sq(double x, double y) {
    const double lg_real =
        log_gamma(Cplx(0.5 * x)).real() - log_gamma(Cplx(0.5 * (x + 1.0))).real();
    const double lg_abs = log_gamma(Cplx(0.5 * (x + 1.0), 0.5 * y)).real() -
                          log_gamma(Cplx(0.5 * x, 0.5 * y)).real();
    return std::exp(2.0 * (lg_real + lg_abs)) / (2.0 * x - 1.0);
}

// The canonical tail value F({gamma_l^2/(lambda_l - z)}_{l>=1}) of the Coulomb
// family with order base m (= mu + k for the k-th suffix):
//   Gamma(1/2+m-s) Gamma(1/2+m+s) / (Gamma(m) Gamma(m+1)) e^{-i zeta}
//   1F1(m+i nu; 2m; 2 i zeta),   s = sqrt(1+4 nu zeta)/2,  zeta = 1/z.
Cplx coulomb_tail(double m, double nu, Cplx zeta) {
    const Cplx s = 0.5 * std::sqrt(Cplx(1.0) + 4.0 * nu * zeta);
    const Cplx pref = std::exp(log_gamma(0.5 + m - s) + log_gamma(0.5 + m + s) -
                               log_gamma(Cplx(m)) - log_gamma(Cplx(m + 1.0)));
    return pref * coulomb_kernel(m, nu, zeta);
}

} // namespace

JacobiModel coulomb_model(const CoulombParams& p) {
    if (!(p.mu > 0.0)) throw DomainError("coulomb_model: requires mu > 0");
    const double mu = p.mu, nu = p.nu;

    JacobiModel m;
    m.side = Side::unilateral;
    m.name = "coulomb";
    m.params = {{"mu", mu}, {"nu", nu}};
    m.lambda = [mu, nu](std::int64_t k) { return Cplx(coulomb_lambda(mu + double(k), nu)); };
    m.w = [mu, nu](std::int64_t k) { return Cplx(coulomb_w(mu + double(k), nu)); };
    m.gamma_sq = [mu, nu](std::int64_t k) { return Cplx(coulomb_gamma_sq(mu + double(k), nu)); };
    m.tail_convergent = true;
    m.essential_zero = true;
    m.char_poles_at_lambda = true;
    m.eigvec_w0 = 1.0;

    m.closed_char = [mu, nu](Cplx z) { return coulomb_tail(mu, nu, 1.0 / z); };

    // canonical xi_k: prod_{l=1}^k w_{l-1}/(z - lambda_l) times the k-th tail,
    // with w_0 := 1
    m.closed_eigvec = [mu, nu](Cplx z, std::int64_t k) -> Cplx {
        const Cplx zeta = 1.0 / z;
        Cplx pref = 1.0;
        for (std::int64_t l = 1; l <= k; ++l) {
            const Cplx wprev = l == 1 ? Cplx(1.0) : Cplx(coulomb_w(mu + double(l - 1), nu));
            pref *= wprev / (z - coulomb_lambda(mu + double(l), nu));
        }
        return pref * coulomb_tail(mu + double(k), nu, zeta);
    };
    return m;
}

namespace {

// Regularized Kummer member of the confluent family:
//   M~(1 - A - B - Z; 1 - B - Z + k; B),  A = alpha/beta, B = beta/gamma^2,
//   Z = z/gamma.
Cplx confluent_member(const ConfluentParams& p, Cplx z, std::int64_t k) {
    const double A = p.alpha / p.beta, B = p.beta / (p.gamma * p.gamma);
    const Cplx Z = z / p.gamma;
    return hyp1f1_regularized(1.0 - A - B - Z, 1.0 - B - Z + double(k), Cplx(B));
}

} // namespace

JacobiModel confluent_model(const ConfluentParams& p) {
    if (!(p.beta > 0.0 && p.gamma > 0.0 && p.alpha + p.beta > 0.0))
        throw DomainError("confluent_model: requires beta > 0, gamma > 0, alpha + beta > 0");
    const double alpha = p.alpha, beta = p.beta, gamma = p.gamma;
    const double A = alpha / beta;

    JacobiModel m;
    m.side = Side::unilateral;
    m.name = "confluent";
    m.params = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
    m.lambda = [gamma](std::int64_t k) { return Cplx(gamma * double(k)); };
    m.w = [alpha, beta](std::int64_t k) { return Cplx(std::sqrt(alpha + beta * double(k))); };
    // gamma_k^2 = sqrt(2 beta) Gamma((A+k+1)/2) / Gamma((A+k)/2)
    m.gamma_sq = [A, beta](std::int64_t k) {
        return Cplx(std::sqrt(2.0 * beta) *
                    std::exp(log_gamma(Cplx(0.5 * (A + double(k) + 1.0))).real() -
                             log_gamma(Cplx(0.5 * (A + double(k)))).real()));
    };
    m.tail_convergent = false; // sum |w_n^2 / ...| diverges for this family
    m.essential_zero = false;
    m.char_poles_at_lambda = false;
    m.eigvec_w0 = std::sqrt(std::max(alpha, 0.0));

    ConfluentParams pc = p;
    m.closed_char = [pc](Cplx z) { return confluent_member(pc, z, 0); };

    // v_k = (-1)^k beta^{k/2} gamma^{-k} Gamma(A+k)^{1/2} M~(...; k); the k = 0
    // member is Gamma(A)^{1/2} times the characteristic function.  The
    // prefactor alone overflows for large k while the product stays tiny, so
    // the two are combined in log space.
    m.closed_eigvec = [pc, A, beta, gamma](Cplx z, std::int64_t k) -> Cplx {
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        const double lp = 0.5 * double(k) * std::log(beta) - double(k) * std::log(gamma) +
                          0.5 * log_gamma(Cplx(A + double(k))).real();
        const Cplx member = confluent_member(pc, z, k);
        if (member == Cplx(0.0)) return 0.0;
        return sgn * std::exp(lp + std::log(member));
    };

    if (alpha == 0.0) {
        m.closed_spectrum = [beta, gamma](double lo, double hi) {
            std::vector<double> out;
            for (long j = 1;; ++j) {
                const double z = -beta / gamma + gamma * double(j);
                if (z > hi) break;
                if (z >= lo) out.push_back(z);
            }
            return out;
        };
    }
    return m;
}

Cplx confluent_finite_charpoly(const ConfluentParams& p, long n, Cplx z) {
    if (n < 1) throw DomainError("confluent_finite_charpoly: n must be >= 1");
    const double A = p.alpha / p.beta, B = p.beta / (p.gamma * p.gamma);
    const Cplx Z = z / p.gamma;
    const Cplx a1 = 1.0 - A - B - Z;

    const Cplx t1 = std::exp(log_gamma(double(n) + 1.0 - B - Z) - log_gamma(1.0 - B - Z)) *
                    hyp1f1(a1, 1.0 - B - Z, Cplx(B)) *
                    hyp1f1(-double(n) - A, -double(n) + B + Z, Cplx(B));
    const Cplx t2 = std::pow(Cplx(B), double(n + 1)) *
                    std::exp(log_gamma(Cplx(double(n) + 1.0 + A)) + log_gamma(-B - Z) -
                             log_gamma(Cplx(A)) - log_gamma(double(n) + 2.0 - B - Z)) *
                    hyp1f1(1.0 - A, 1.0 + B + Z, Cplx(B)) *
                    hyp1f1(a1, double(n) + 2.0 - B - Z, Cplx(B));
    return std::pow(Cplx(p.gamma), double(n)) * std::exp(-B) * (t1 - t2);
}

Cplx confluent_finite_eigvec_at(const ConfluentParams& p, long n, Cplx z, long k) {
    if (n < 1 || k < 1 || k > n + 1)
        throw DomainError("confluent_finite_eigvec_at: need 1 <= k <= n+1");
    const double A = p.alpha / p.beta, B = p.beta / (p.gamma * p.gamma);
    const Cplx Z = z / p.gamma;
    const Cplx a1 = 1.0 - A - B - Z;

    const Cplx t1 = std::exp(log_gamma(Cplx(A + double(k))) + log_gamma(1.0 - B - Z + double(n)) -
                             log_gamma(1.0 - B - Z + double(k))) *
                    hyp1f1(a1, 1.0 - B - Z + double(k), Cplx(B)) *
                    hyp1f1(-A - double(n), B + Z - double(n), Cplx(B));
    const Cplx t2 = std::pow(Cplx(B), double(n - k + 1)) *
                    std::exp(log_gamma(Cplx(1.0 + A + double(n))) + log_gamma(-B - Z + double(k)) -
                             log_gamma(2.0 - B - Z + double(n))) *
                    hyp1f1(1.0 - A - double(k), 1.0 + B + Z - double(k), Cplx(B)) *
                    hyp1f1(a1, 2.0 - B - Z + double(n), Cplx(B));

    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    const Cplx pref = sgn * std::exp(0.5 * double(k) * std::log(p.beta) -
                                     double(k) * std::log(p.gamma) -
                                     0.5 * log_gamma(Cplx(A + double(k))));
    return pref * (t1 - t2);
}

std::vector<Cplx> confluent_finite_eigvec(const ConfluentParams& p, long n, Cplx z) {
    std::vector<Cplx> v(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) v[std::size_t(k - 1)] = confluent_finite_eigvec_at(p, n, z, k);
    return v;
}

JacobiModel qbessel_model(const QBesselParams& p) {
    QParam qp(p.q);
    if (!(p.beta >= 0.0)) throw DomainError("qbessel_model: requires beta >= 0 "
                                            "(negative beta is unitarily equivalent)");
    const double q = qp.value, beta = p.beta, lq = std::log(q);

    JacobiModel m;
    m.side = Side::bilateral;
    m.name = "qbessel";
    m.params = {{"beta", beta}, {"q", q}};
    m.lambda = [lq](std::int64_t n) { return Cplx(std::exp(double(n) * lq)); };
    m.w = [lq, beta](std::int64_t n) { return Cplx(beta * std::exp(0.5 * double(n) * lq)); };
    // gamma_{2k-1}^2 = q^{k-1}, gamma_{2k}^2 = q^k beta^2
    m.gamma_sq = [lq, beta](std::int64_t n) {
        if (n % 2 != 0) { // n = 2k-1
            const std::int64_t k = (n + 1) / 2;
            return Cplx(std::exp(double(k - 1) * lq));
        }
        const std::int64_t k = n / 2;
        return Cplx(beta * beta * std::exp(double(k) * lq));
    };
    m.tail_convergent = true;
    m.essential_zero = true;
    m.char_poles_at_lambda = false;

    // zeros of (z^{-1};q)_inf (qz;q)_inf (-beta^2 z^{-1};q)_inf are exactly
    // q^Z u (-beta^2 q^{Z+})
    m.closed_char = [q, beta](Cplx z) {
        return poch_q_inf(1.0 / z, q) * poch_q_inf(q * z, q) * poch_q_inf(-beta * beta / z, q);
    };

    m.closed_spectrum = [q, beta, lq](double lo, double hi) {
        std::vector<double> out;
        const double floor_z = 1e-12; // the essential-spectrum point 0 is never emitted
        if (hi >= floor_z) {
            const double bot = std::max(lo, floor_z);
            const long m_min = long(std::ceil(std::log(hi) / lq - 1e-9));
            for (long mm = m_min;; ++mm) {
                const double z = std::exp(double(mm) * lq);
                if (z < bot) break;
                if (z <= hi && z >= lo) out.push_back(z);
            }
        }
        if (lo < 0.0 && beta > 0.0) {
            for (long mm = 0;; ++mm) {
                const double z = -beta * beta * std::exp(double(mm) * lq);
                if (z > -floor_z) break;
                if (z >= lo && z <= hi) out.push_back(z);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    // v^+ for z = q^m, v^- for z = -beta^2 q^m; the branch is detected from z.
    m.closed_eigvec = [q, beta, lq](Cplx z, std::int64_t k) -> Cplx {
        const double zr = z.real();
        if (zr > 0.0) {
            const long mm = std::lround(std::log(zr) / lq);
            const double x = 2.0 * std::exp(-(2.0 * double(mm) + 1.0) / 4.0 * lq) * beta;
            return std::exp((double(mm) - double(k)) / 4.0 * lq) *
                   jfrak(Cplx(double(k) - double(mm)), Cplx(x), q);
        }
        if (!(beta > 0.0)) throw DomainError("qbessel closed_eigvec: negative branch needs beta > 0");
        const long mm = std::lround(std::log(-zr / (beta * beta)) / lq);
        const double b2i = 1.0 / (beta * beta);
        const Cplx b = -std::exp(double(k - mm + 1) * lq) * b2i;
        const Cplx arg = -std::exp(double(k - 2 * mm + 1) * lq) * b2i;
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        const double lp = double(k) * (double(k) - 4.0 * double(mm) - 1.0) / 4.0 * lq -
                          double(k) * std::log(beta);
        return sgn * std::exp(lp) / poch_q_inf(q, q).real() * poch_q_inf(b, q) *
               phi01(b, q, arg);
    };
    return m;
}

double qbessel_vplus_norm_sq(const QBesselParams& p, long m) {
    const double q = p.q;
    return poch_q_inf(-std::exp(-double(m) * std::log(q)) * p.beta * p.beta, q).real();
}

JacobiModel qconfluent_model(const QConfluentParams& p) {
    QParam qp(p.q);
    if (!(p.gamma > -1.0)) throw DomainError("qconfluent_model: requires gamma > -1");
    if (!(std::abs(p.sigma) <= 20.0))
        throw DomainError("qconfluent_model: |sigma| > 20 overflows cosh^2");
    const double q = qp.value, sg = p.sigma, gm = p.gamma, lq = std::log(q);
    const double C = std::cosh(0.5 * sg) * std::cosh(0.5 * sg);
    const double S = std::sinh(0.5 * sg) * std::sinh(0.5 * sg);
    const double sh = std::sinh(sg);

    JacobiModel m;
    m.side = Side::unilateral;
    m.name = "qconfluent";
    m.params = {{"sigma", sg}, {"gamma", gm}, {"q", q}};
    m.lambda = [lq](std::int64_t n) { return Cplx(std::exp(double(n - 1) * lq)); };
    m.w = [lq, sh, gm, q](std::int64_t n) {
        return Cplx(0.5 * sh * std::exp(0.5 * (double(n) - gm - 1.0) * lq) *
                    std::sqrt(1.0 - std::exp((double(n) + gm) * std::log(q))));
    };
    // gamma_k^2 = q^{(k-gamma)/2 - 3/4} (sinh(sigma)/2) (q^{gamma+k};q^2)_inf /
    //             (q^{gamma+k+1};q^2)_inf
    m.gamma_sq = [lq, sh, gm, q](std::int64_t k) {
        const double q2 = q * q;
        const Cplx num = poch_q_inf(std::exp((gm + double(k)) * lq), q2);
        const Cplx den = poch_q_inf(std::exp((gm + double(k) + 1.0) * lq), q2);
        return Cplx(0.5 * sh * std::exp((0.5 * (double(k) - gm) - 0.75) * lq)) * num / den;
    };
    m.tail_convergent = true;
    m.essential_zero = true;
    m.char_poles_at_lambda = false;

    m.closed_char = [q, gm, C, S, lq](Cplx z) {
        const Cplx a = std::exp(-gm * lq) * C / z;
        return phi11_weighted(a, C / z, q, -S / z);
    };

    // Eq-(51)-style family; member 0 is the characteristic function itself.
    m.closed_eigvec = [q, gm, C, S, sh, lq](Cplx z, std::int64_t n) -> Cplx {
        const Cplx a = std::exp(-gm * lq) * C / z;
        const Cplx qn = std::exp(double(n) * lq);
        const Cplx body = phi11_weighted(a, qn * C / z, q, -qn * S / z);
        if (n == 0) return body;
        if (body == Cplx(0.0)) return 0.0;
        const Cplx lpref = (-0.5 * gm * double(n) + double(n) * (double(n) - 3.0) / 4.0) * lq +
                           double(n) * std::log(Cplx(sh)) - double(n) * std::log(2.0 * z) -
                           0.5 * std::log(poch_q_inf(std::exp((gm + double(n)) * lq), q));
        return std::exp(lpref + std::log(body));
    };

    if (gm == 0.0) {
        m.closed_spectrum = [q, C, S, lq](double lo, double hi) {
            std::vector<double> out;
            const double floor_z = 1e-12;
            for (long k = 0;; ++k) {
                const double zp = C * std::exp(double(k) * lq);
                if (zp < floor_z) break;
                if (zp >= lo && zp <= hi) out.push_back(zp);
            }
            if (S > 0.0)
                for (long k = 0;; ++k) {
                    const double zn = -S * std::exp(double(k) * lq);
                    if (zn > -floor_z) break;
                    if (zn >= lo && zn <= hi) out.push_back(zn);
                }
            std::sort(out.begin(), out.end());
            return out;
        };
    }
    return m;
}

} // namespace jacspec
