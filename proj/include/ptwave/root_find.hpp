#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "errors.hpp"

namespace ptwave {

struct BrentOpts {
    double x_tol = 1e-13;   // absolute tolerance on the root abscissa
    int max_iter = 200;
};

// Brent's method on [a,b]; requires f(a) and f(b) of opposite sign.
template <class F>
double brent(F&& f, double a, double b, BrentOpts opts = {}) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw BracketFailure("brent: endpoints do not bracket a root");
    double c = a, fc = fa;
    double d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * eps * std::abs(b) + 0.5 * opts.x_tol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                                   std::abs(e * q))) {
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
    }
    return b;
}

// Expand geometrically from x0 in the direction of `step` until f changes
// sign against f(x0); clamps to `limit` (may be +-inf). Returns the bracket.
template <class F>
std::pair<double, double> expand_bracket(F&& f, double x0, double step,
                                         double limit, int max_iter = 200) {
    double f0 = f(x0);
    if (f0 == 0.0) return {x0, x0};
    double prev = x0;
    double x = x0 + step;
    for (int i = 0; i < max_iter; ++i) {
        bool clamped = false;
        if (step > 0.0 && x >= limit) {
            x = limit;
            clamped = true;
        }
        if (step < 0.0 && x <= limit) {
            x = limit;
            clamped = true;
        }
        double fx = f(x);
        if ((fx > 0.0) != (f0 > 0.0) || fx == 0.0) return {prev, x};
        if (clamped) break;
        prev = x;
        step *= 1.7;
        x += step;
    }
    throw BracketFailure("expand_bracket: no sign change before limit");
}

} // namespace ptwave
