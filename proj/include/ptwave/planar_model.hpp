#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "root_find.hpp"
#include "scalar_field.hpp"

namespace ptwave {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Open rectangle, edges may be infinite.
struct Domain {
    double x_lo = -kInf, x_hi = kInf;
    double y_lo = -kInf, y_hi = kInf;

    bool contains(double x, double y) const {
        return x > x_lo && x < x_hi && y > y_lo && y < y_hi;
    }
};

inline Domain whole_plane() { return Domain{}; }

// Optional closed-form view H(x,y) = A(x) y^2 + B(x) with A > 0 near the
// center, B(center)=0, B'(center)=0, B''(center) = 2/b^2 > 0, A(center)=a^2.
struct SeparableParts {
    ScalarField1D A;
    ScalarField1D B;
    double a_const = 0.0;   // sqrt(A(center))
    double b_const = 0.0;   // sqrt(2/B''(center)); +inf for a degenerate center
};

// First integral H, time-scale factor s > 0 and restoring term f of a planar
// system written as  x' = y/s,  y' = f/s,  so that dH/dy = y/s and
// dH/dx = -f/s.  H is normalised to H(center,0) = 0 and its closed ovals fill
// the annulus 0 < h < h_ceiling around (center, 0).
class PlanarModel {
public:
    using Field2 = std::function<double(double, double)>;

    PlanarModel(Field2 H, Field2 s, Field2 f, double center_x,
                double h_ceiling, Domain dom,
                std::optional<SeparableParts> sep = std::nullopt)
        : H_(std::move(H)), s_(std::move(s)), f_(std::move(f)),
          center_x_(center_x), h_ceiling_(h_ceiling), domain_(dom),
          sep_(std::move(sep)),
          annulus_x_lo_(dom.x_lo), annulus_x_hi_(dom.x_hi) {}

    double H(double x, double y) const { return H_(x, y); }
    double s(double x, double y) const { return s_(x, y); }
    double f(double x, double y) const { return f_(x, y); }

    double center_x() const { return center_x_; }
    double h_ceiling() const { return h_ceiling_; }
    const Domain& domain() const { return domain_; }
    const std::optional<SeparableParts>& separable() const { return sep_; }

    // x-interval on which H(.,0) is strictly monotone on each side of the
    // center (bounded by the nearest saddle or domain edge). Turning-point
    // brackets never step past these.
    double annulus_x_lo() const { return annulus_x_lo_; }
    double annulus_x_hi() const { return annulus_x_hi_; }
    void set_annulus_limits(double lo, double hi) {
        annulus_x_lo_ = lo;
        annulus_x_hi_ = hi;
    }
    void set_h_ceiling(double h) { h_ceiling_ = h; }

private:
    Field2 H_, s_, f_;
    double center_x_;
    double h_ceiling_;
    Domain domain_;
    std::optional<SeparableParts> sep_;
    double annulus_x_lo_, annulus_x_hi_;
};

// Builds the model induced by a separable Hamiltonian: s = 1/(2A),
// f = -(A' y^2 + B')/(2A). B must already vanish (with its derivative) at
// the center.
inline PlanarModel make_separable_model(SeparableParts parts, double center_x,
                                        Domain dom,
                                        double h_ceiling = kInf) {
    const ScalarField1D A = parts.A;
    const ScalarField1D B = parts.B;
    if (!(A.value(center_x) > 0.0))
        throw InvalidParams("separable model: A(center) must be positive");
    if (std::abs(B.value(center_x)) > 1e-9)
        throw InvalidParams("separable model: B(center) must vanish");
    if (std::abs(B.derivative(center_x)) > 1e-9)
        throw InvalidParams("separable model: B'(center) must vanish");
    double b2 = B.second_derivative(center_x);
    parts.a_const = std::sqrt(A.value(center_x));
    parts.b_const = b2 > 0.0 ? std::sqrt(2.0 / b2) : kInf;
    auto Hf = [A, B](double x, double y) {
        return A.value(x) * y * y + B.value(x);
    };
    auto sf = [A](double x, double) { return 1.0 / (2.0 * A.value(x)); };
    auto ff = [A, B](double x, double y) {
        return -(A.derivative(x) * y * y + B.derivative(x)) /
               (2.0 * A.value(x));
    };
    return PlanarModel(Hf, sf, ff, center_x, h_ceiling, dom, std::move(parts));
}

enum class EquilibriumKind { Center, Saddle, Degenerate };

inline const char* to_string(EquilibriumKind k) {
    switch (k) {
        case EquilibriumKind::Center: return "center";
        case EquilibriumKind::Saddle: return "saddle";
        default: return "degenerate";
    }
}

namespace detail {

// Richardson-extrapolated central difference of f(.,0).
inline double dfdx_on_axis(const PlanarModel& m, double x) {
    double h = 1e-4 * (1.0 + std::abs(x));
    auto d = [&](double step) {
        return (m.f(x + step, 0.0) - m.f(x - step, 0.0)) / (2.0 * step);
    };
    double c = d(h), fine = d(0.5 * h);
    return (4.0 * fine - c) / 3.0;
}

} // namespace detail

// Sign test on df/dx at an equilibrium of the restoring term: negative means
// a center, positive a saddle.
inline EquilibriumKind classify_equilibrium(const PlanarModel& m,
                                            double x_star,
                                            double tol = 1e-8) {
    double f0 = m.f(x_star, 0.0);
    if (std::abs(f0) > 1e-9)
        throw NotAnEquilibrium("classify_equilibrium: f(x,0) = " +
                               std::to_string(f0) + " at x = " +
                               std::to_string(x_star));
    double slope = detail::dfdx_on_axis(m, x_star);
    if (slope < -tol) return EquilibriumKind::Center;
    if (slope > tol) return EquilibriumKind::Saddle;
    return EquilibriumKind::Degenerate;
}

struct AnnulusInfo {
    double h_ceiling = kInf;
    double x_lo_limit = -kInf;   // monotone stretch of H(.,0), left of center
    double x_hi_limit = kInf;
    std::vector<double> rival_equilibria;   // non-center equilibria found
};

// Scans the restoring term along y=0 for rival equilibria and caps the
// annulus energy by the smallest of: H at any saddle/degenerate equilibrium,
// and the approach value of H(.,0) at a domain edge.
inline AnnulusInfo analyze_annulus(const PlanarModel& m,
                                   double search_halfwidth = 0.0) {
    const double c = m.center_x();
    if (classify_equilibrium(m, c) != EquilibriumKind::Center)
        throw NoCenter("analyze_annulus: stated center does not classify as "
                       "a center");
    const Domain& dom = m.domain();
    double span = search_halfwidth > 0.0 ? search_halfwidth
                                         : 100.0 * (1.0 + std::abs(c));
    auto edge_margin = [](double edge) {
        return 1e-7 * (1.0 + std::abs(edge));
    };
    double lo = std::isfinite(dom.x_lo)
                    ? dom.x_lo + edge_margin(dom.x_lo)
                    : c - span;
    double hi = std::isfinite(dom.x_hi)
                    ? dom.x_hi - edge_margin(dom.x_hi)
                    : c + span;

    AnnulusInfo info;
    info.x_lo_limit = std::isfinite(dom.x_lo) ? dom.x_lo : -kInf;
    info.x_hi_limit = std::isfinite(dom.x_hi) ? dom.x_hi : kInf;

    const int n = 4096;
    double prev_x = lo, prev_f = m.f(lo, 0.0);
    std::vector<double> roots;
    for (int i = 1; i <= n; ++i) {
        double x = lo + (hi - lo) * i / n;
        double fx = m.f(x, 0.0);
        if (std::isfinite(prev_f) && std::isfinite(fx) && prev_f * fx < 0.0) {
            double r = brent([&](double t) { return m.f(t, 0.0); }, prev_x, x);
            roots.push_back(r);
        }
        prev_x = x;
        prev_f = fx;
    }

    // The annulus is bounded on each side by the nearest rival equilibrium,
    // or failing that by the domain edge.
    for (double r : roots) {
        if (std::abs(r - c) <= 1e-7 * (1.0 + std::abs(c))) continue;
        info.rival_equilibria.push_back(r);
        if (r > c && r < info.x_hi_limit) info.x_hi_limit = r;
        if (r < c && r > info.x_lo_limit) info.x_lo_limit = r;
    }

    std::vector<double> candidates;
    bool hi_is_rival = !info.rival_equilibria.empty() &&
                       info.x_hi_limit < dom.x_hi;
    bool lo_is_rival = !info.rival_equilibria.empty() &&
                       info.x_lo_limit > dom.x_lo;
    auto side_candidate = [&](double limit, bool is_rival, int dir) {
        // dir = +1 for the right side, -1 for the left.
        if (is_rival) {
            candidates.push_back(m.H(limit, 0.0));
            return;
        }
        if (std::isfinite(limit)) {
            // Approach value at a finite domain edge (Ostrovsky-like).
            double probe = limit - dir * 1e-9 * (1.0 + std::abs(limit));
            double level = m.H(probe, 0.0);
            if (std::isfinite(level) && level > 0.0)
                candidates.push_back(level);
            return;
        }
        // No rival and no edge: H(.,0) is monotone out to infinity. A
        // saturating potential still caps the annulus; probe two far
        // stations and keep the value only if it has stopped growing.
        double w = 1.0 + std::abs(c);
        double near_v, far_v;
        try {
            near_v = m.H(c + dir * 1e5 * w, 0.0);
            far_v = m.H(c + dir * 1e6 * w, 0.0);
        } catch (const Error&) {
            return;
        }
        if (std::isfinite(near_v) && std::isfinite(far_v) && far_v > 0.0 &&
            far_v < 1.01 * near_v)
            candidates.push_back(far_v);
    };
    side_candidate(info.x_hi_limit, hi_is_rival, +1);
    side_candidate(info.x_lo_limit, lo_is_rival, -1);
    for (double v : candidates)
        if (v > 0.0 && v < info.h_ceiling) info.h_ceiling = v;
    return info;
}

inline double energy_ceiling(const PlanarModel& m) {
    return analyze_annulus(m).h_ceiling;
}

struct TurningPoints {
    double x_minus = 0.0;
    double x_plus = 0.0;
};

namespace detail {

inline double turning_root(const PlanarModel& m, double h, bool right) {
    const double c = m.center_x();
    double limit = right ? m.annulus_x_hi() : m.annulus_x_lo();
    auto phi = [&](double x) { return m.H(x, 0.0) - h; };
    double step0;
    if (m.separable() && std::isfinite(m.separable()->b_const))
        step0 = 0.5 * m.separable()->b_const * std::sqrt(h);
    else
        step0 = 1e-3 * (1.0 + std::abs(c));
    if (!right) step0 = -step0;

    if (std::isfinite(limit)) {
        // H(.,0) is monotone up to `limit`, where it reaches at least
        // h_ceiling; a hair inside the limit the bracket is guaranteed.
        double inner = limit - (right ? 1.0 : -1.0) * 1e-9 * (1.0 + std::abs(limit));
        if (phi(inner) <= 0.0)
            throw BracketFailure("turning_points: level not reached before "
                                 "the annulus limit; h too close to the "
                                 "ceiling");
        return brent(phi, right ? c : inner, right ? inner : c,
                     BrentOpts{1e-13, 200});
    }
    auto [a, b] = expand_bracket(phi, c, step0, limit);
    return brent(phi, std::min(a, b), std::max(a, b), BrentOpts{1e-13, 200});
}

} // namespace detail

// The two crossings of the oval of energy h with the x-axis.
inline TurningPoints turning_points(const PlanarModel& m, double h) {
    if (!(h > 0.0) || !(h < m.h_ceiling()))
        throw EnergyOutOfRange("turning_points: h = " + std::to_string(h) +
                               " outside (0, h_ceiling)");
    TurningPoints tp;
    tp.x_minus = detail::turning_root(m, h, false);
    tp.x_plus = detail::turning_root(m, h, true);
    return tp;
}

// Max mixed-relative mismatch of dH/dy vs y/s and dH/dx vs -f/s on an
// n x n probe grid over the given rectangle.
inline double consistency_error(const PlanarModel& m, double x_lo, double x_hi,
                                double y_lo, double y_hi, int n = 10) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double x = x_lo + (x_hi - x_lo) * (i + 0.5) / n;
            double y = y_lo + (y_hi - y_lo) * (j + 0.5) / n;
            double hx = 1e-5 * (1.0 + std::abs(x));
            double hy = 1e-5 * (1.0 + std::abs(y));
            double dHy = (m.H(x, y + hy) - m.H(x, y - hy)) / (2.0 * hy);
            double dHx = (m.H(x + hx, y) - m.H(x - hx, y)) / (2.0 * hx);
            double s = m.s(x, y);
            double want_y = y / s;
            double want_x = -m.f(x, y) / s;
            double ey = std::abs(dHy - want_y) / (1.0 + std::abs(want_y));
            double ex = std::abs(dHx - want_x) / (1.0 + std::abs(want_x));
            worst = std::max(worst, std::max(ex, ey));
        }
    }
    return worst;
}

// Probe rectangle spanning the oval at mid-energy; used by the catalog
// integrity checks.
inline double consistency_error_mid_oval(const PlanarModel& m) {
    double h_mid = std::isfinite(m.h_ceiling()) ? 0.5 * m.h_ceiling() : 0.5;
    TurningPoints tp = turning_points(m, h_mid);
    double width = tp.x_plus - tp.x_minus;
    double s0 = m.s(m.center_x(), 0.0);
    double y_amp = std::sqrt(2.0 * h_mid * s0);
    return consistency_error(m, tp.x_minus + 0.05 * width,
                             tp.x_plus - 0.05 * width, -0.9 * y_amp,
                             0.9 * y_amp, 10);
}

} // namespace ptwave
