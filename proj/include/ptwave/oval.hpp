#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "planar_model.hpp"
#include "quadrature.hpp"
#include "root_find.hpp"

namespace ptwave {

// A closed level curve H = h around the center, cut by the x-axis at
// x_minus < x_plus. All line integrals over it use the clockwise
// parameterization, which is the direction of the flow (x' = y/s moves right
// along the upper branch) and makes the integral of y dx equal +area.
struct Oval {
    const PlanarModel* model = nullptr;
    double h = 0.0;
    double x_minus = 0.0;
    double x_plus = 0.0;
};

inline Oval make_oval(const PlanarModel& m, double h) {
    TurningPoints tp = turning_points(m, h);
    return Oval{&m, h, tp.x_minus, tp.x_plus};
}

namespace detail {

inline double branch_root(const PlanarModel& m, double x, double h, bool up) {
    // H is strictly monotone in y on each side of the axis (dH/dy = y/s),
    // so a sign bracket plus Brent is enough.
    double base = m.H(x, 0.0) - h;
    if (base >= 0.0) return 0.0;   // at/beyond a turning point
    double s0 = m.s(x, 0.0);
    double guess = std::sqrt(std::max(1e-300, -2.0 * base * s0));
    double y = up ? guess : -guess;
    double ylim = up ? m.domain().y_hi : m.domain().y_lo;
    for (int i = 0; i < 200; ++i) {
        if ((up && y >= ylim) || (!up && y <= ylim))
            throw BranchSolveFailure("branch solve left the domain at x = " +
                                     std::to_string(x));
        if (m.H(x, y) - h >= 0.0) {
            auto g = [&](double yy) { return m.H(x, yy) - h; };
            double a = up ? 0.0 : y, b = up ? y : 0.0;
            return brent(g, a, b, BrentOpts{1e-14, 200});
        }
        y *= 2.0;
    }
    throw BranchSolveFailure("branch solve did not bracket at x = " +
                             std::to_string(x));
}

} // namespace detail

// y on the upper (lower) branch of the oval at abscissa x.
inline double upper_branch_y(const PlanarModel& m, double x, double h) {
    if (m.separable()) {
        const SeparableParts& p = *m.separable();
        double t = (h - p.B.value(x)) / p.A.value(x);
        return std::sqrt(std::max(0.0, t));
    }
    return detail::branch_root(m, x, h, true);
}

inline double lower_branch_y(const PlanarModel& m, double x, double h) {
    if (m.separable()) return -upper_branch_y(m, x, h);
    return detail::branch_root(m, x, h, false);
}

struct OvalQuad {
    double value = 0.0;
    double error = 0.0;
};

// Clockwise line integral of F(x,y) dx over the oval:
//   integral from x- to x+ of [F(x, y+(x)) - F(x, y-(x))] dx.
// The substitution x = mid + half*sin(theta) absorbs the square-root
// behaviour of the branches at the turning points, so Gauss-Legendre in
// theta converges spectrally; an adaptive fallback covers integrands with
// sharp interior variation.
template <class F>
OvalQuad integrate_oval_err(const Oval& oval, F&& integrand,
                            double abs_tol = 1e-10) {
    const PlanarModel& m = *oval.model;
    const double mid = 0.5 * (oval.x_minus + oval.x_plus);
    const double half = 0.5 * (oval.x_plus - oval.x_minus);
    const double pi_half = 1.57079632679489661923;
    auto g = [&](double theta) {
        double x = mid + half * std::sin(theta);
        double yu = upper_branch_y(m, x, oval.h);
        double yl = lower_branch_y(m, x, oval.h);
        return (integrand(x, yu) - integrand(x, yl)) * half * std::cos(theta);
    };
    quad::Result r = quad::gl_doubling(g, -pi_half, pi_half, abs_tol, 32, 4096);
    if (!r.converged)
        r = quad::adaptive_gl(g, -pi_half, pi_half, abs_tol);
    if (!r.converged)
        throw ToleranceNotMet("integrate_oval: requested " +
                              std::to_string(abs_tol) + ", reached " +
                              std::to_string(r.error) + " at h = " +
                              std::to_string(oval.h));
    return OvalQuad{r.value, r.error};
}

template <class F>
double integrate_oval(const Oval& oval, F&& integrand, double abs_tol = 1e-10) {
    return integrate_oval_err(oval, std::forward<F>(integrand), abs_tol).value;
}

} // namespace ptwave
