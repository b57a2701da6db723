#include "jacspec/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace jacspec {

std::string to_string(SpectralMethod m) {
    return m == SpectralMethod::char_zero ? "char_zero" : "oracle";
}

Cplx charpoly(const JacobiModel& model, long n, Cplx z) {
    if (n < 1) throw DomainError("charpoly: n must be >= 1");
    bool collision = false;
    std::vector<Cplx> lam(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) {
        lam[std::size_t(k - 1)] = model.lambda(k);
        const Cplx d = lam[std::size_t(k - 1)] - z;
        if (std::abs(d) < 1e-13 * (1.0 + std::abs(z))) collision = true;
    }
    if (collision) {
        // three-term determinant recurrence D_k = (l_k - z) D_{k-1} - w_{k-1}^2 D_{k-2}
        Cplx dm1 = 1.0, dm2 = 0.0;
        for (long k = 1; k <= n; ++k) {
            const Cplx wk = k >= 2 ? model.w(k - 1) : Cplx(0.0);
            const Cplx d = (lam[std::size_t(k - 1)] - z) * dm1 - wk * wk * dm2;
            dm2 = dm1;
            dm1 = d;
        }
        return dm1;
    }
    Cplx prod = 1.0;
    std::vector<Cplx> xs(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) {
        const Cplx d = lam[std::size_t(k - 1)] - z;
        prod *= d;
        xs[std::size_t(k - 1)] = model.gamma_sq(k) / d;
    }
    return prod * f_finite(xs);
}

namespace {

void require_unilateral(const JacobiModel& m, const char* who) {
    if (m.side != Side::unilateral)
        throw DomainError(std::string(who) + ": unilateral model required");
}

} // namespace

std::vector<Cplx> xi(const JacobiModel& model, Cplx z, long k_max, double tol) {
    require_unilateral(model, "xi");
    if (!model.tail_convergent)
        throw DomainError("xi: model violates the tail convergence condition; "
                          "use its closed forms or finite sections");
    if (k_max < 0) throw DomainError("xi: k_max must be >= 0");

    auto x_of = [&](std::int64_t l) -> Cplx {
        const Cplx d = model.lambda(l) - z;
        if (std::abs(d) < 1e-12 * (1.0 + std::abs(z)))
            throw PoleError("xi: z collides with a diagonal entry");
        return model.gamma_sq(l) / d;
    };

    TailSeq seq{x_of, 1, std::nullopt};
    std::int64_t m = tail_window(seq, tol);
    m = std::max<std::int64_t>(m, k_max + 2);

    std::vector<Cplx> xs(static_cast<std::size_t>(m));
    for (std::int64_t l = 1; l <= m; ++l) xs[std::size_t(l - 1)] = x_of(l);
    const std::vector<Cplx> F = f_suffixes(xs); // F[j-1] = F(x_j..x_m)

    std::vector<Cplx> out(static_cast<std::size_t>(k_max + 1));
    Cplx pref = 1.0;
    for (long k = 0; k <= k_max; ++k) {
        if (k >= 1) {
            const Cplx wprev = k == 1 ? Cplx(1.0) : model.w(k - 1); // w_0 := 1
            pref *= wprev / (z - model.lambda(k));
        }
        out[std::size_t(k)] = pref * F[std::size_t(k)];
    }
    return out;
}

std::vector<Cplx> finite_xi(const JacobiModel& model, long n, Cplx z) {
    require_unilateral(model, "finite_xi");
    if (n < 1) throw DomainError("finite_xi: n must be >= 1");
    std::vector<Cplx> xs(static_cast<std::size_t>(n));
    std::vector<Cplx> lam(static_cast<std::size_t>(n));
    for (long j = 1; j <= n; ++j) {
        lam[std::size_t(j - 1)] = model.lambda(j);
        const Cplx d = lam[std::size_t(j - 1)] - z;
        if (std::abs(d) < 1e-13 * (1.0 + std::abs(z)))
            throw PoleError("finite_xi: z collides with a diagonal entry");
        xs[std::size_t(j - 1)] = model.gamma_sq(j) / d;
    }
    const std::vector<Cplx> F = f_suffixes(xs);

    // suffix products prod_{j=k+1}^n (lambda_j - z)
    std::vector<Cplx> suff(std::size_t(n + 1), Cplx(1.0));
    for (long j = n; j >= 1; --j)
        suff[std::size_t(j - 1)] = (lam[std::size_t(j - 1)] - z) * suff[std::size_t(j)];

    std::vector<Cplx> out(static_cast<std::size_t>(n));
    Cplx wprod = 1.0; // prod_{j=1}^{k-1} w_j
    double sign = 1.0;
    for (long k = 1; k <= n; ++k) {
        if (k >= 2) wprod *= model.w(k - 1);
        out[std::size_t(k - 1)] = sign * wprod * suff[std::size_t(k)] * F[std::size_t(k)];
        sign = -sign;
    }
    return out;
}

Cplx char_function(const JacobiModel& model, Cplx z, const ToleranceConfig& cfg) {
    if (model.closed_char) return model.closed_char(z);
    return xi(model, z, 0, cfg.work_tol)[0];
}

Cplx weyl_m(const JacobiModel& model, Cplx z, const ToleranceConfig& cfg) {
    if (model.closed_eigvec)
        return model.closed_eigvec(z, 1) / (model.eigvec_w0 * model.closed_eigvec(z, 0));
    const auto v = xi(model, z, 1, cfg.work_tol);
    return v[1] / v[0];
}

Tridiag truncate(const JacobiModel& model, long N) {
    if (N < 2 && model.side == Side::unilateral)
        throw DomainError("truncate: N must be >= 2");
    if (N < 1) throw DomainError("truncate: N must be >= 1");
    auto as_real = [](Cplx v, const char* what) -> double {
        if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real())))
            throw DomainError(std::string("truncate: ") + what + " is not real");
        return v.real();
    };
    Tridiag t;
    if (model.side == Side::unilateral) {
        t.index0 = 1;
        t.diag.reserve(std::size_t(N));
        for (long k = 1; k <= N; ++k) t.diag.push_back(as_real(model.lambda(k), "lambda"));
        for (long k = 1; k < N; ++k) t.off.push_back(as_real(model.w(k), "w"));
    } else {
        t.index0 = -N;
        t.diag.reserve(std::size_t(2 * N + 1));
        for (long k = -N; k <= N; ++k) t.diag.push_back(as_real(model.lambda(k), "lambda"));
        for (long k = -N; k < N; ++k) t.off.push_back(as_real(model.w(k), "w"));
    }
    return t;
}

int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double t) {
    const std::size_t n = diag.size();
    if (off.size() + 1 != n) throw DomainError("sturm_count: offdiag length must be n-1");
    double emax2 = 1.0;
    for (double e : off) emax2 = std::max(emax2, e * e);
    const double pivmin = emax2 * std::numeric_limits<double>::min() * 8.0;

    int cnt = 0;
    double d = diag[0] - t;
    if (d < 0.0) ++cnt;
    for (std::size_t i = 1; i < n; ++i) {
        double den = d;
        if (std::abs(den) < pivmin) den = den < 0.0 ? -pivmin : pivmin;
        d = (diag[i] - t) - off[i - 1] * off[i - 1] / den;
        if (d < 0.0) ++cnt;
    }
    return cnt;
}

std::vector<double> sym_tridiag_eigen(const std::vector<double>& diag,
                                      const std::vector<double>& off, double abs_tol) {
    const std::size_t n = diag.size();
    if (n == 0) return {};
    if (off.size() + 1 != n) throw DomainError("sym_tridiag_eigen: offdiag length must be n-1");

    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double pad = 1e-3 * (hi - lo) + 1e-12;
    lo -= pad;
    hi += pad;

    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double a = k > 0 ? out[k - 1] - abs_tol : lo; // eigenvalues come out ascending
        a = std::min(a, hi);
        a = std::max(a, lo);
        double b = hi;
        while (b - a > std::max(abs_tol, 8.0 * eps * std::max(std::abs(a), std::abs(b)))) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(diag, off, mid) > int(k))
                b = mid;
            else
                a = mid;
        }
        out[k] = 0.5 * (a + b);
    }
    return out;
}

namespace {

std::vector<Cplx> generic_bilateral_vector(const JacobiModel& model, Cplx z, long k_max,
                                           const ToleranceConfig& cfg) {
    // f_n = P_n F({gamma_k^2 / (z - lambda_k)}_{k=n+1}^M): the solution decaying
    // at +infinity; at an eigenvalue it is the eigenvector.
    auto x_of = [&](std::int64_t l) { return model.gamma_sq(l) / (z - model.lambda(l)); };
    TailSeq seq{x_of, -k_max, std::nullopt};
    std::int64_t m = tail_window(seq, cfg.work_tol);
    m = std::max<std::int64_t>(m, k_max + 2);

    std::vector<Cplx> xs;
    xs.reserve(std::size_t(m + k_max + 1));
    for (std::int64_t l = -k_max; l <= m; ++l) xs.push_back(x_of(l));
    const std::vector<Cplx> F = f_suffixes(xs);

    std::vector<Cplx> v(static_cast<std::size_t>(2 * k_max + 1));
    // P_n with P_{-k_max} = 1 (overall scale is irrelevant, vectors get normalized)
    Cplx p = 1.0;
    for (std::int64_t nidx = -k_max; nidx <= k_max; ++nidx) {
        if (nidx > -k_max) p *= model.w(nidx - 1) / (z - model.lambda(nidx));
        v[std::size_t(nidx + k_max)] = p * F[std::size_t(nidx + k_max + 1)];
    }
    return v;
}

} // namespace

std::vector<Cplx> eigenvector(const JacobiModel& model, Cplx z, long k_max,
                              const ToleranceConfig& cfg) {
    if (k_max < 2) throw DomainError("eigenvector: k_max must be >= 2");
    std::vector<Cplx> v;
    if (model.side == Side::unilateral) {
        if (model.closed_eigvec) {
            v.resize(std::size_t(k_max));
            for (long k = 1; k <= k_max; ++k) v[std::size_t(k - 1)] = model.closed_eigvec(z, k);
        } else {
            const auto all = xi(model, z, k_max, cfg.work_tol);
            v.assign(all.begin() + 1, all.end());
        }
    } else {
        if (model.closed_eigvec) {
            v.resize(std::size_t(2 * k_max + 1));
            for (long k = -k_max; k <= k_max; ++k)
                v[std::size_t(k + k_max)] = model.closed_eigvec(z, k);
        } else {
            v = generic_bilateral_vector(model, z, k_max, cfg);
        }
    }
    Eigen::Map<Eigen::VectorXcd> vv(v.data(), Eigen::Index(v.size()));
    const double nrm = vv.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm))
        throw DomainError("eigenvector: computed vector is numerically null");
    vv /= nrm;
    return v;
}

double eigen_residual(const JacobiModel& model, Cplx z, const std::vector<Cplx>& v) {
    const long K = long(v.size());
    if (K < 3) throw DomainError("eigen_residual: window too small");
    const std::int64_t index0 = model.side == Side::unilateral ? 1 : -(K - 1) / 2;
    auto lam = [&](long i) { return model.lambda(index0 + i); };
    auto w = [&](long i) { return model.w(index0 + i); }; // couples rows i and i+1

    double r2 = 0.0, n2 = 0.0;
    for (long i = 0; i < K; ++i) n2 += std::norm(v[std::size_t(i)]);
    const long first = model.side == Side::unilateral ? 0 : 1;
    for (long i = first; i + 1 < K; ++i) {
        Cplx r = (lam(i) - z) * v[std::size_t(i)] + w(i) * v[std::size_t(i + 1)];
        if (i > 0) r += w(i - 1) * v[std::size_t(i - 1)];
        r2 += std::norm(r);
    }
    return std::sqrt(r2 / n2);
}

std::pair<double, double> norm_identity_check(const JacobiModel& model, double z, double h,
                                              const ToleranceConfig& cfg) {
    require_unilateral(model, "norm_identity_check");
    auto member = [&](Cplx at, long k) -> Cplx {
        if (model.closed_eigvec) return model.closed_eigvec(at, k);
        return xi(model, at, k, cfg.work_tol)[std::size_t(k)];
    };

    double sum = 0.0;
    long K = 64;
    double prev_block = std::numeric_limits<double>::infinity();
    for (;;) {
        std::vector<Cplx> u;
        if (model.closed_eigvec) {
            u.resize(std::size_t(K));
            for (long k = 1; k <= K; ++k) u[std::size_t(k - 1)] = model.closed_eigvec(z, k);
        } else {
            const auto all = xi(model, z, K, cfg.work_tol);
            u.assign(all.begin() + 1, all.end());
        }
        sum = 0.0;
        for (const Cplx& c : u) sum += std::norm(c);
        double tail_block = 0.0;
        for (long k = K - K / 4; k < K; ++k) tail_block += std::norm(u[std::size_t(k)]);
        if (tail_block < 1e-15 * sum || K >= 4096 || tail_block >= prev_block) break;
        prev_block = tail_block;
        K *= 2;
    }

    const Cplx d0 = (member(Cplx(z + h), 0) - member(Cplx(z - h), 0)) / (2.0 * h);
    const Cplx rhs = model.eigvec_w0 * d0 * member(Cplx(z), 1);
    return {sum, rhs.real()};
}

namespace {

struct Root {
    double z;
    std::array<double, 2> bracket;
    double residual;
};

// Diagonal entries of the model inside [lo, hi] (pole candidates of the
// characteristic function).
std::vector<double> lambdas_in(const JacobiModel& model, double lo, double hi, long cap) {
    std::vector<double> out;
    const long from = model.side == Side::unilateral ? 1 : -cap;
    for (long n = from; n <= cap; ++n) {
        const Cplx l = model.lambda(n);
        if (std::abs(l.imag()) < 1e-10 && l.real() > lo && l.real() < hi)
            out.push_back(l.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SpectralResult find_real_eigenvalues(const JacobiModel& model, double lo, double hi,
                                     const ToleranceConfig& cfg) {
    if (!(lo < hi)) throw DomainError("find_real_eigenvalues: empty window");
    SpectralResult res;
    res.method = SpectralMethod::char_zero;
    res.params = model.params;
    res.params["window_lo"] = lo;
    res.params["window_hi"] = hi;

    // Keep a margin around the accumulation point of the diagonal, which
    // hosts the essential spectrum and must never be reported as a root.
    std::vector<std::pair<double, double>> spans;
    if (model.essential_zero) {
        const double margin = std::max(10.0 * cfg.root_tol, 1e-9);
        if (lo < -margin) spans.emplace_back(lo, std::min(hi, -margin));
        if (hi > margin) spans.emplace_back(std::max(lo, margin), hi);
        res.params["margin"] = margin;
    } else {
        spans.emplace_back(lo, hi);
    }

    auto f = [&](double z) { return char_function(model, Cplx(z), cfg).real(); };

    // Coarse truncated-matrix anchors to set the local grid density.
    const long coarse_N = std::max(40, cfg.truncation_N / 4);
    std::vector<double> anchors;
    try {
        const Tridiag t = truncate(model, coarse_N);
        anchors = sym_tridiag_eigen(t.diag, t.off, cfg.root_tol);
    } catch (const DomainError&) {
        // non-real model: fall back to the uniform grid alone
    }

    const long k_res = model.side == Side::unilateral ? cfg.truncation_N
                                                      : std::max(20, cfg.truncation_N / 2);

    std::vector<Root> roots;
    for (auto [a, b] : spans) {
        // grid: uniform backstop plus 64 points per anchor gap
        std::set<double> grid;
        const int np = std::max(16, cfg.scan_points);
        for (int i = 0; i <= np; ++i) grid.insert(a + (b - a) * double(i) / double(np));
        std::vector<double> pts{a, b};
        for (double e : anchors)
            if (e > a && e < b) pts.push_back(e);
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            for (int j = 1; j < 64; ++j)
                grid.insert(pts[i] + (pts[i + 1] - pts[i]) * double(j) / 64.0);

        const std::vector<double> gs(grid.begin(), grid.end());
        std::vector<double> fs(gs.size());
        for (std::size_t i = 0; i < gs.size(); ++i) fs[i] = f(gs[i]);

        const std::vector<double> poles =
            model.char_poles_at_lambda ? lambdas_in(model, a, b, 4 * cfg.truncation_N)
                                       : std::vector<double>{};

        for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
            const double fa = fs[i], fb = fs[i + 1];
            if (!std::isfinite(fa) || !std::isfinite(fb)) continue;
            if (fa == 0.0) continue; // zero on a grid node is caught by its right bracket
            if (!(fa * fb < 0.0) && fb != 0.0) continue;
            // A sign change across huge magnitudes can be a genuine zero (the
            // q-model characteristic functions grow like q^{-k^2} towards the
            // accumulation point), so poles are rejected by containment of a
            // diagonal entry and by the post-refinement magnitude test below,
            // not by an endpoint threshold.

            bool pole_inside = false;
            for (double p : poles)
                if (p >= gs[i] && p <= gs[i + 1]) pole_inside = true;
            if (pole_inside) continue;

            // bisection refinement
            double xa = gs[i], xb = gs[i + 1], va = fa;
            bool fail = false;
            for (int it = 0; xb - xa > cfg.root_tol; ++it) {
                if (it > 200) {
                    fail = true;
                    break;
                }
                const double mid = 0.5 * (xa + xb);
                const double vm = f(mid);
                if (!std::isfinite(vm)) {
                    fail = true;
                    break;
                }
                if (va * vm <= 0.0)
                    xb = mid;
                else {
                    xa = mid;
                    va = vm;
                }
            }
            if (fail) {
                res.notes.push_back("bracket refinement failed near z=" +
                                    std::to_string(0.5 * (xa + xb)));
                continue;
            }
            const double zr = 0.5 * (xa + xb);
            const double fz = std::abs(f(zr));
            if (fz > std::max(std::abs(fa), std::abs(fb))) continue; // pole, not a zero

            double residual = std::numeric_limits<double>::quiet_NaN();
            try {
                const auto v = eigenvector(model, Cplx(zr), k_res, cfg);
                residual = eigen_residual(model, Cplx(zr), v);
            } catch (const std::exception& e) {
                res.notes.push_back(std::string("residual unavailable at z=") +
                                    std::to_string(zr) + ": " + e.what());
            }
            roots.push_back({zr, {gs[i], gs[i + 1]}, residual});
        }
    }

    // merge near-duplicates, keeping the smaller residual
    std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.z < y.z; });
    std::vector<Root> dedup;
    for (const Root& r : roots) {
        if (!dedup.empty() && std::abs(r.z - dedup.back().z) < 5.0 * cfg.root_tol) {
            if (r.residual < dedup.back().residual) dedup.back() = r;
        } else {
            dedup.push_back(r);
        }
    }

    for (const Root& r : dedup)
        res.eigenvalues.push_back({Cplx(r.z), r.bracket, r.residual});
    return res;
}

} // namespace jacspec
