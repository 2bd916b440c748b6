#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "ode.hpp"
#include "oval.hpp"
#include "parallel.hpp"
#include "planar_model.hpp"
#include "root_find.hpp"

namespace ptwave {

// tau-period of the unperturbed closed orbit at energy h. The integrand
// s/y has square-root endpoint behavior that the oval parameterization
// absorbs; near the ceiling a looser tolerance is retried before giving up.
inline double oval_period(const PlanarModel& m, double h) {
    Oval ov = make_oval(m, h);
    auto F = [&m](double x, double y) { return m.s(x, y) / y; };
    try {
        return integrate_oval(ov, F, 1e-9);
    } catch (const NumericError&) {
        return integrate_oval(ov, F, 1e-5);
    }
}

namespace detail {

struct SectionRun {
    bool hit = false;       // reached {y=0, x>center} with the right direction
    double tau_end = 0.0;   // crossing time, or the time the cap stopped us
    double x_end = 0.0;
    double sigma_end = 0.0; // physical wave coordinate, d sigma = d tau / s
};

// Integrates x' = y/s, y' = f/s + eps*pert, sigma' = 1/s from (x0, 0) until
// the first downward crossing of {y=0, x > center}. The crossing is located
// on the dense interpolant. `trail` (optional) collects every accepted step.
inline SectionRun run_to_section(const PlanarModel& m,
                                 const PlanarModel::Field2* pert, double eps,
                                 double x0, double tau_cap,
                                 std::vector<ode::DenseStep<3>>* trail) {
    using State = std::array<double, 3>;
    const Domain dom = m.domain();
    auto rhs = [&m, pert, eps, dom](double, const State& z, State& dz) {
        if (!dom.contains(z[0], z[1]))
            throw EscapedAnnulus("trajectory left the model domain");
        double sv = m.s(z[0], z[1]);
        dz[0] = z[1] / sv;
        dz[1] = m.f(z[0], z[1]) / sv +
                (pert ? eps * (*pert)(z[0], z[1]) : 0.0);
        dz[2] = 1.0 / sv;
    };
    ode::Dopri5<3> solver(rhs);
    solver.init(0.0, {x0, 0.0, 0.0});
    ode::DenseStep<3> st;
    double y_prev = 0.0;
    const double c = m.center_x();
    while (solver.t() < tau_cap) {
        solver.step(st);
        if (trail) trail->push_back(st);
        double y_new = solver.y()[1];
        if (y_prev > 0.0 && y_new <= 0.0) {
            double tau_star =
                (y_new == 0.0)
                    ? st.t1()
                    : brent([&st](double t) { return st.eval(1, t); }, st.t0,
                            st.t1(),
                            BrentOpts{1e-14 * std::max(1.0, st.t1()), 200});
            double xs = st.eval(0, tau_star);
            if (xs > c)
                return SectionRun{true, tau_star, xs, st.eval(2, tau_star)};
        }
        y_prev = y_new;
        if (solver.steps() > 20'000'000)
            throw EscapedAnnulus("step budget exhausted before the section "
                                 "return");
    }
    return SectionRun{false, solver.t(), solver.y()[0], solver.y()[2]};
}

inline std::string fmt_g(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace detail

// Poincare return map on the section {y = 0, x > center}, clockwise
// direction. Returns the next crossing abscissa; optionally reports the
// return time in tau.
inline double return_map(const PlanarModel& m, const PlanarModel::Field2& pert,
                         double eps, double x0, double* tau_out = nullptr) {
    if (std::abs(eps) > 1e-2 * (1.0 + 1e-12))
        throw InvalidParams("|epsilon| exceeds the 1e-2 cap");
    const double c = m.center_x();
    if (!(x0 > c))
        throw InvalidParams("return_map: x0 must lie right of the center");
    if (!(x0 < m.annulus_x_hi()))
        throw EscapedAnnulus("x0 lies beyond the period annulus");
    double h0 = m.H(x0, 0.0);
    if (!(h0 > 0.0) || !(h0 < m.h_ceiling()))
        throw EscapedAnnulus("H(x0, 0) outside the period annulus energies");
    double T0 = oval_period(m, h0);
    detail::SectionRun run =
        detail::run_to_section(m, &pert, eps, x0, 10.0 * T0, nullptr);
    if (!run.hit)
        throw EscapedAnnulus("no section return within 10 unperturbed "
                             "periods");
    if (tau_out) *tau_out = run.tau_end;
    return run.x_end;
}

inline double return_map(const FamilyInstance& fi, double eps, double x0,
                         double* tau_out = nullptr) {
    return return_map(fi.model, fi.pert_integrand, eps, x0, tau_out);
}

struct FixedPointRec {
    double x_section = 0.0;
    double h_equiv = 0.0;     // H(x_section, 0) of the unperturbed system
    double period_tau = 0.0;  // unperturbed period at h_equiv (NaN if unknown)
    bool attracting = false;
};

struct MatchedZeroRec {
    double zero_h = 0.0;
    double cycle_h = 0.0;
    double relative_gap = 0.0;
};

struct LimitCycleReport {
    double epsilon = 0.0;
    bool degenerate_continuum = false;
    std::vector<FixedPointRec> fixed_points;
    std::vector<MatchedZeroRec> matched_zeros;
    std::vector<std::string> warnings;
};

// Scans n_seeds section points log-spaced in h (same layout as the default
// Melnikov grid), brackets sign changes of the displacement P(x) - x, and
// refines each by bisection. Seeds whose integration fails are skipped with
// a warning. h_cap is required when the annulus is unbounded in h.
inline LimitCycleReport detect_limit_cycles(
    const PlanarModel& m, const PlanarModel::Field2& pert, double eps,
    int n_seeds = 128, double h_cap = 0.0,
    const std::vector<double>& melnikov_zeros = {}) {
    if (std::abs(eps) > 1e-2 * (1.0 + 1e-12))
        throw InvalidParams("|epsilon| exceeds the 1e-2 cap");
    std::vector<double> hs = default_h_grid(m, n_seeds, h_cap);
    const std::size_t n = hs.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> xs(n, nan), disp(n, nan);
    std::vector<std::string> seed_warn(n);
    parallel_for(n, [&](std::size_t i) {
        try {
            xs[i] = turning_points(m, hs[i]).x_plus;
            disp[i] = return_map(m, pert, eps, xs[i]) - xs[i];
        } catch (const Error& e) {
            seed_warn[i] = "seed h=" + detail::fmt_g(hs[i]) +
                           " skipped: " + e.what();
        }
    });
    LimitCycleReport rep;
    rep.epsilon = eps;
    for (auto& w : seed_warn)
        if (!w.empty()) rep.warnings.push_back(w);
    double dmax = 0.0, xmax = 1.0;
    std::size_t valid = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(disp[i])) continue;
        dmax = std::max(dmax, std::abs(disp[i]));
        xmax = std::max(xmax, std::abs(xs[i]));
        ++valid;
    }
    if (valid == 0) {
        rep.warnings.push_back("no seed produced a valid displacement");
        return rep;
    }
    if (dmax <= 1e-9 * xmax) {
        // every seed is fixed to integrator accuracy: the unperturbed
        // continuum of closed orbits, not isolated cycles
        rep.degenerate_continuum = true;
        return rep;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!std::isfinite(disp[i]) || !std::isfinite(disp[i + 1])) continue;
        if (disp[i] == 0.0 || disp[i] * disp[i + 1] >= 0.0) continue;
        double a = xs[i], b = xs[i + 1], da = disp[i];
        bool attracting = da > 0.0;
        bool failed = false;
        try {
            for (int it = 0; it < 80 && (b - a) > 1e-10 * (1.0 + std::abs(b));
                 ++it) {
                double xm = 0.5 * (a + b);
                double dm = return_map(m, pert, eps, xm) - xm;
                if (dm == 0.0) {
                    a = b = xm;
                    break;
                }
                if ((dm > 0.0) == (da > 0.0)) {
                    a = xm;
                    da = dm;
                } else {
                    b = xm;
                }
            }
        } catch (const Error& e) {
            rep.warnings.push_back("refinement near x=" +
                                   detail::fmt_g(0.5 * (a + b)) +
                                   " abandoned: " + e.what());
            failed = true;
        }
        if (failed) continue;
        FixedPointRec fp;
        fp.x_section = 0.5 * (a + b);
        fp.h_equiv = m.H(fp.x_section, 0.0);
        fp.attracting = attracting;
        fp.period_tau = nan;
        try {
            fp.period_tau = oval_period(m, fp.h_equiv);
        } catch (const Error&) {
        }
        rep.fixed_points.push_back(fp);
    }
    if (!melnikov_zeros.empty()) {
        for (const auto& fp : rep.fixed_points) {
            double best = melnikov_zeros.front();
            for (double z : melnikov_zeros)
                if (std::abs(fp.h_equiv - z) < std::abs(fp.h_equiv - best))
                    best = z;
            rep.matched_zeros.push_back(
                {best, fp.h_equiv, std::abs(fp.h_equiv - best) /
                                       std::abs(best)});
        }
    }
    return rep;
}

inline LimitCycleReport detect_limit_cycles(
    const FamilyInstance& fi, double eps, int n_seeds = 128,
    double h_cap = 0.0, const std::vector<double>& melnikov_zeros = {}) {
    return detect_limit_cycles(fi.model, fi.pert_integrand, eps, n_seeds,
                               h_cap, melnikov_zeros);
}

struct WaveSample {
    double s = 0.0;   // physical wave coordinate
    double u = 0.0;   // profile value U(s)
};

struct WaveProfile {
    double h = 0.0;
    double c = std::numeric_limits<double>::quiet_NaN();   // wave speed
    double period_tau = 0.0;
    double period_s = 0.0;
    double u_min = 0.0, u_max = 0.0;   // profile extrema, located at y = 0
    std::vector<WaveSample> samples;
    std::vector<std::string> warnings;
};

// Reconstructs one period of the traveling wave U(s) on the oval at energy
// h by co-integrating d sigma/d tau = 1/s around the unperturbed orbit and
// resampling uniformly in sigma. If the orbit fails to close within the
// time cap (saddle approach), the profile is truncated and a PeriodOverflow
// warning is attached.
inline WaveProfile wave_profile(const PlanarModel& m, double h, int n_samples,
                                double tau_cap = 0.0) {
    if (!(h > 0.0) || !(h < m.h_ceiling()))
        throw EnergyOutOfRange("wave_profile: h outside (0, h_ceiling)");
    if (n_samples < 2)
        throw InvalidParams("wave_profile: need at least 2 samples");
    double x0 = turning_points(m, h).x_plus;
    WaveProfile wp;
    wp.h = h;
    if (tau_cap <= 0.0) {
        try {
            tau_cap = 10.0 * oval_period(m, h);
        } catch (const NumericError&) {
            tau_cap = 1e5;
            wp.warnings.push_back("period quadrature did not converge; "
                                  "using fallback time cap 1e5");
        }
    }
    std::vector<ode::DenseStep<3>> trail;
    detail::SectionRun run =
        detail::run_to_section(m, nullptr, 0.0, x0, tau_cap, &trail);
    if (trail.empty()) throw EscapedAnnulus("no integration steps taken");
    if (!run.hit)
        wp.warnings.push_back("PeriodOverflow: orbit did not close within "
                              "time cap " + detail::fmt_g(tau_cap) +
                              "; profile truncated");
    wp.period_tau = run.tau_end;
    wp.period_s = run.sigma_end;
    // U is extremal exactly where y vanishes; hunt the crossings on the
    // dense trail rather than relying on the sample grid.
    wp.u_min = wp.u_max = x0;
    for (const auto& st : trail) {
        double ya = st.eval(1, st.t0), yb = st.eval(1, st.t1());
        double tv;
        if (ya == 0.0)
            tv = st.t0;
        else if (yb == 0.0)
            tv = st.t1();
        else if ((ya > 0.0) != (yb > 0.0))
            tv = brent([&st](double t) { return st.eval(1, t); }, st.t0,
                       st.t1(), BrentOpts{1e-14 * std::max(1.0, st.t1()), 200});
        else
            continue;
        double xv = st.eval(0, tv);
        wp.u_min = std::min(wp.u_min, xv);
        wp.u_max = std::max(wp.u_max, xv);
    }
    wp.samples.reserve(n_samples);
    std::size_t k = 0;
    for (int j = 0; j < n_samples; ++j) {
        double target = wp.period_s * j / (n_samples - 1.0);
        while (k + 1 < trail.size() &&
               trail[k].eval(2, trail[k].t1()) < target)
            ++k;
        const auto& st = trail[k];
        double tj;
        if (target <= st.eval(2, st.t0))
            tj = st.t0;
        else if (target >= st.eval(2, st.t1()))
            tj = st.t1();
        else
            tj = brent([&st, target](double t) { return st.eval(2, t) -
                                                        target; },
                       st.t0, st.t1(),
                       BrentOpts{1e-13 * std::max(1.0, st.t1()), 200});
        wp.samples.push_back({target, st.eval(0, tj)});
    }
    return wp;
}

inline WaveProfile wave_profile(const FamilyInstance& fi, double h,
                                int n_samples, double tau_cap = 0.0) {
    WaveProfile wp = wave_profile(fi.model, h, n_samples, tau_cap);
    auto it = fi.params.find("c");
    if (it != fi.params.end()) wp.c = it->second;
    return wp;
}

} // namespace ptwave
