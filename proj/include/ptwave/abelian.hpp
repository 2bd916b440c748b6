#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "oval.hpp"
#include "parallel.hpp"
#include "planar_model.hpp"
#include "scalar_field.hpp"

namespace ptwave {

namespace detail {

inline double int_pow(double x, int n) {
    double acc = 1.0, base = x;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

} // namespace detail

// One term d * x^(2q) * y^(2p-1); the building block of designed
// perturbations. Sums of these are what place_zeros emits.
struct MonomialTerm {
    int q = 0;       // half the x exponent
    int p = 1;       // (y exponent + 1)/2
    double d = 0.0;  // coefficient

    int weight() const { return q + p; }
};

struct MonomialPerturbation {
    std::vector<MonomialTerm> terms;

    double operator()(double x, double y) const {
        double acc = 0.0;
        for (const MonomialTerm& t : terms)
            acc += t.d * detail::int_pow(x, 2 * t.q) *
                   detail::int_pow(y, 2 * t.p - 1);
        return acc;
    }
};

// Exact value of the moment integral
//   K(p,n) = int_0^1 (z(1-z))^((2p-1)/2) (z-1/2)^(2n) dz
//          = (2p-1)!! (2n-1)!! / (8^(p+n) (p+n)!) * pi
// evaluated as a product of ratios so nothing overflows.
inline double K_closed_form(int p, int n) {
    if (p < 1 || n < 0)
        throw InvalidParams("K_closed_form: need p >= 1, n >= 0");
    if (p + n > 20)
        throw Overflow("K_closed_form: p + n > 20 not supported");
    const double pi = 3.14159265358979323846;
    double v = pi;
    for (int i = 1; i <= p; ++i) v *= (2.0 * i - 1.0) / (8.0 * i);
    for (int j = 1; j <= n; ++j) v *= (2.0 * j - 1.0) / (8.0 * (p + j));
    return v;
}

struct JLeading {
    double coefficient = 0.0;
    int exponent = 0;
};

// Small-energy behaviour of J_p(h) = cw-integral of D(x) y^p dx when the
// density is D(x) = d (x - center)^(2n) (1 + O(x - center)) and p = 2p'-1 is
// odd:  J ~ coefficient * h^(p'+n) with
//   coefficient = 2 d b^(2n+1) / a^(2p'-1) * (2p'-1)!! (2n-1)!! pi
//                 / (2^(p'+n) (p'+n)!).
// `p_odd` is the literal y exponent.
inline JLeading J_asymptotic_leading(const PlanarModel& m, double d, int n,
                                     int p_odd) {
    if (!m.separable())
        throw InvalidParams("J_asymptotic_leading: separable model required");
    if (p_odd < 1 || p_odd % 2 == 0)
        throw InvalidParams("J_asymptotic_leading: p must be a positive odd "
                            "integer");
    const SeparableParts& sp = *m.separable();
    if (!std::isfinite(sp.b_const))
        throw InvalidParams("J_asymptotic_leading: degenerate center (b not "
                            "finite)");
    int pp = (p_odd + 1) / 2;
    const double pi = 3.14159265358979323846;
    double num = 1.0;
    for (int i = 1; i <= pp; ++i) num *= 2.0 * i - 1.0;
    for (int j = 1; j <= n; ++j) num *= 2.0 * j - 1.0;
    double den = 1.0;
    for (int i = 1; i <= pp + n; ++i) den *= 2.0 * i;
    // den = 2^(p'+n) (p'+n)!
    double a_pow = detail::int_pow(sp.a_const, 2 * pp - 1);
    double b_pow = detail::int_pow(sp.b_const, 2 * n + 1);
    JLeading out;
    out.coefficient = 2.0 * d * b_pow / a_pow * num * pi / den;
    out.exponent = pp + n;
    return out;
}

// J_p(h): clockwise integral of D(x) y^p dx over the oval at energy h.
// Vanishes identically for even p by the y-symmetry of separable
// Hamiltonians; that case short-circuits to exactly zero.
inline double abelian_J(const PlanarModel& m, const ScalarField1D& D, int p,
                        double h, double abs_tol = 1e-10) {
    if (!m.separable())
        throw InvalidParams("abelian_J: separable model required");
    if (p < 1) throw InvalidParams("abelian_J: p must be >= 1");
    if (p % 2 == 0) return 0.0;
    Oval oval = make_oval(m, h);
    auto F = [&](double x, double y) {
        return D.value(x) * detail::int_pow(y, p);
    };
    return integrate_oval(oval, F, abs_tol);
}

// Log-spaced sample energies. Finite ceilings span
// [lo_frac*ceiling, hi_frac*ceiling]; infinite ones need a caller-supplied
// cap and span [lo_frac*cap, hi_frac*cap].
inline std::vector<double> default_h_grid(const PlanarModel& m, int n = 64,
                                          double cap = 0.0,
                                          double lo_frac = 1e-4,
                                          double hi_frac = 0.999) {
    double top = m.h_ceiling();
    if (!std::isfinite(top)) {
        if (!(cap > 0.0))
            throw InvalidParams("default_h_grid: model has an unbounded "
                                "annulus; pass an energy cap");
        top = cap;
    }
    if (n < 2) throw InvalidParams("default_h_grid: need n >= 2");
    double lo = std::log(lo_frac * top), hi = std::log(hi_frac * top);
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = std::exp(lo + (hi - lo) * i / (n - 1));
    return grid;
}

struct MelnikovSample {
    double h = 0.0;
    double M = 0.0;
    double quad_error = 0.0;
};

struct MelnikovCurve {
    std::vector<MelnikovSample> samples;
    double h_lo = 0.0;
    double h_hi = 0.0;
    double quad_tol = 1e-10;
};

// First-order energy response of the perturbed flow, evaluated with the
// positively oriented (counterclockwise) curve; this is the convention the
// closed-form family references use, so M = -(clockwise integral). Under it
// the displacement of the return map in h is ~ -eps * const * M with a
// positive constant. Simple zeros are orientation-independent.
template <class Pert>
MelnikovSample melnikov_point(const PlanarModel& m, Pert&& pert, double h,
                              double abs_tol = 1e-10) {
    Oval oval = make_oval(m, h);
    OvalQuad q = integrate_oval_err(oval, pert, abs_tol);
    return MelnikovSample{h, -q.value, q.error};
}

template <class Pert>
MelnikovCurve melnikov_curve(const PlanarModel& m, Pert&& pert,
                             const std::vector<double>& h_grid,
                             double abs_tol = 1e-10) {
    if (h_grid.empty())
        throw InvalidParams("melnikov_curve: empty energy grid");
    for (std::size_t i = 0; i < h_grid.size(); ++i) {
        if (!(h_grid[i] > 0.0) || !(h_grid[i] < m.h_ceiling()))
            throw EnergyOutOfRange("melnikov_curve: grid point " +
                                   std::to_string(h_grid[i]) +
                                   " outside (0, h_ceiling)");
        if (i > 0 && !(h_grid[i] > h_grid[i - 1]))
            throw InvalidParams("melnikov_curve: grid must be strictly "
                                "increasing");
    }
    MelnikovCurve curve;
    curve.h_lo = h_grid.front();
    curve.h_hi = h_grid.back();
    curve.quad_tol = abs_tol;
    curve.samples.resize(h_grid.size());
    parallel_for(h_grid.size(), [&](std::size_t i) {
        curve.samples[i] = melnikov_point(m, pert, h_grid[i], abs_tol);
    });
    return curve;
}

} // namespace ptwave
