#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace qpm::roots {

struct Bracket {
    double lo, hi;
};

struct Result {
    double x;
    double fx;
    int iters;
    bool converged;
};

// Uniform pre-scan of [a, b] in n intervals collecting sign changes.
// Intervals where f evaluates to a non-finite value are skipped, so callers
// can mark gaps (e.g. no forward QPM) by returning NaN.
inline std::vector<Bracket> scan_brackets(const std::function<double(double)>& f,
                                          double a, double b, int n = 400) {
    std::vector<Bracket> out;
    if (!(b > a) || n < 1) return out;
    const double h = (b - a) / n;
    double x0 = a;
    double f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = (i == n) ? b : a + i * h;
        const double f1 = f(x1);
        if (std::isfinite(f0) && std::isfinite(f1)) {
            if (f0 == 0.0)
                out.push_back({x0, x0});
            else if (f0 * f1 < 0.0)
                out.push_back({x0, x1});
        }
        x0 = x1;
        f0 = f1;
    }
    if (std::isfinite(f0) && f0 == 0.0) out.push_back({b, b});
    return out;
}

// Brent's method on a bracketing interval. Stops once the interval shrinks
// below xtol (relative) or |f| drops below ftol.
inline Result brent(const std::function<double(double)>& f, double a, double b,
                    double xtol = 1e-13, double ftol = 0.0, int maxit = 80) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, fa, 0, true};
    if (fb == 0.0) return {b, fb, 0, true};
    if (fa * fb > 0.0) return {std::numeric_limits<double>::quiet_NaN(), fa, 0, false};

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 1; iter <= maxit; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= ftol)
            return {b, fb, iter, true};
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return {b, fb, maxit, false};
}

// All roots of f on [a, b]: pre-scan in n intervals, Brent-refine each bracket.
inline std::vector<double> find_all_roots(const std::function<double(double)>& f,
                                          double a, double b, int n = 400,
                                          double xtol = 1e-13, double ftol = 0.0,
                                          int maxit = 80) {
    std::vector<double> out;
    for (const auto& br : scan_brackets(f, a, b, n)) {
        if (br.lo == br.hi) {
            out.push_back(br.lo);
            continue;
        }
        const Result r = brent(f, br.lo, br.hi, xtol, ftol, maxit);
        if (r.converged && std::isfinite(r.x)) out.push_back(r.x);
    }
    // collapse near-duplicates from adjacent brackets
    std::vector<double> dedup;
    for (double x : out) {
        if (dedup.empty() || std::abs(x - dedup.back()) > 16.0 * xtol * std::max(1.0, std::abs(x)))
            dedup.push_back(x);
    }
    return dedup;
}

} // namespace qpm::roots
