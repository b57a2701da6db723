#include "jacspec/ffunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jacspec {

Cplx f_finite(std::span<const Cplx> xs) {
    const std::size_t n = xs.size();
    if (n < 2) return 1.0;
    Cplx fp2 = 1.0; // F_{j+2}
    Cplx fp1 = 1.0; // F_{j+1}
    for (std::size_t i = n - 1; i-- > 0;) {
        const Cplx f = fp1 - xs[i] * xs[i + 1] * fp2;
        fp2 = fp1;
        fp1 = f;
    }
    return fp1;
}

std::vector<Cplx> f_suffixes(std::span<const Cplx> xs) {
    const std::size_t n = xs.size();
    std::vector<Cplx> F(n + 1, Cplx(1.0));
    if (n < 2) return F;
    for (std::size_t i = n - 1; i-- > 0;) F[i] = F[i + 1] - xs[i] * xs[i + 1] * F[i + 2];
    return F;
}

namespace {

// Recursive enumeration of index tuples k_1 < k_2 - 1 < ..., each tuple
// contributing (-1)^m x_{k_1} x_{k_1+1} ... x_{k_m} x_{k_m+1}.
void brute_rec(std::span<const Cplx> xs, std::size_t start, const Cplx& prefix, double sign,
               Cplx& acc) {
    for (std::size_t k = start; k + 1 < xs.size(); ++k) {
        const Cplx term = prefix * xs[k] * xs[k + 1];
        acc += sign * term;
        brute_rec(xs, k + 2, term, -sign, acc);
    }
}

} // namespace

Cplx f_bruteforce(std::span<const Cplx> xs, std::size_t max_len) {
    if (xs.size() > max_len)
        throw DomainError("f_bruteforce: sequence length " + std::to_string(xs.size()) +
                          " exceeds cap " + std::to_string(max_len));
    Cplx acc = 1.0;
    brute_rec(xs, 0, Cplx(1.0), -1.0, acc);
    return acc;
}

double pair_sum(std::span<const Cplx> xs) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) s += std::abs(xs[i] * xs[i + 1]);
    return s;
}

double pair_sum(const TailSeq& seq, std::int64_t horizon) {
    if (horizon < 0) throw DomainError("pair_sum: horizon must be >= 0");
    double s = 0.0;
    Cplx prev = seq.gen(seq.k0);
    for (std::int64_t k = seq.k0; k <= seq.k0 + horizon; ++k) {
        const Cplx next = seq.gen(k + 1);
        s += std::abs(prev * next);
        prev = next;
    }
    return s;
}

namespace {

// Smallest M >= k0 with (estimated) sum_{k>=M} |x_k x_{k+1}| < thr.  Without
// an exact bound the residual beyond the examined window is estimated from
// the observed decay ratio of the pair terms; the window keeps doubling until
// that remainder estimate is itself well below thr.
std::int64_t plan_window(const TailSeq& seq, double thr, std::int64_t max_horizon) {
    std::vector<double> t; // t[i] = |x_{k0+i} x_{k0+i+1}|
    std::vector<Cplx> x;
    x.push_back(seq.gen(seq.k0));
    std::int64_t w = 64;
    for (;;) {
        while (std::int64_t(t.size()) < w) {
            const std::int64_t k = seq.k0 + std::int64_t(x.size()) - 1;
            x.push_back(seq.gen(k + 1));
            t.push_back(std::abs(x[x.size() - 2] * x.back()));
        }

        // Residual beyond the window.
        double rem;
        bool rem_ok;
        if (seq.pair_sum_bound) {
            double consumed = 0.0;
            for (double v : t) consumed += v;
            rem = std::max(0.0, *seq.pair_sum_bound - consumed);
            rem_ok = true;
        } else {
            double r = 0.0;
            const std::size_t q = t.size() / 4;
            for (std::size_t i = t.size() - q; i < t.size(); ++i)
                if (t[i - 1] > 0.0) r = std::max(r, t[i] / t[i - 1]);
            r = std::min(r, 0.999);
            rem = t.back() * r / (1.0 - r);
            rem_ok = rem < 0.25 * thr; // trust the estimate only once it is small
        }

        if (rem_ok && rem < thr) {
            // Suffix sums from the back; first index where the residual fits.
            double s = rem;
            std::int64_t m = seq.k0 + std::int64_t(t.size());
            for (std::size_t i = t.size(); i-- > 0;) {
                if (s + t[i] >= 0.5 * thr) break; // keep a factor-2 safety margin
                s += t[i];
                m = seq.k0 + std::int64_t(i);
            }
            return m;
        }

        if (w >= max_horizon)
            throw ConvergenceError("tail pair sum did not fall below threshold within horizon " +
                                   std::to_string(max_horizon));
        w *= 2;
    }
}

} // namespace

std::int64_t tail_window(const TailSeq& seq, double tol, std::int64_t max_horizon) {
    if (!(tol > 0.0)) throw DomainError("tail_window: tol must be positive");
    return plan_window(seq, std::log1p(tol), max_horizon);
}

Cplx f_tail(const TailSeq& seq, double tol, std::int64_t max_horizon) {
    const std::int64_t m = tail_window(seq, tol, max_horizon);
    std::vector<Cplx> xs;
    xs.reserve(std::size_t(m - seq.k0 + 1));
    for (std::int64_t k = seq.k0; k <= m; ++k) xs.push_back(seq.gen(k));
    return f_finite(xs);
}

Cplx f_bilateral(const BilateralSeq& seq, double tol, std::int64_t max_horizon) {
    const double thr = std::log1p(tol) / 2.0;
    TailSeq right{seq.gen, 0, std::nullopt};
    TailSeq left{[&seq](std::int64_t k) { return seq.gen(-k); }, 0, std::nullopt};
    const std::int64_t mr = plan_window(right, thr, max_horizon);
    const std::int64_t ml = plan_window(left, thr, max_horizon);
    std::vector<Cplx> xs;
    xs.reserve(std::size_t(ml + mr + 1));
    for (std::int64_t k = -ml; k <= mr; ++k) xs.push_back(seq.gen(k));
    return f_finite(xs);
}

} // namespace jacspec
