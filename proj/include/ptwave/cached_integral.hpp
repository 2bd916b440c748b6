#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"

namespace ptwave {

// Antiderivative F(x) = int_anchor^x phi(w) dw cached on an adaptive mesh.
// Each panel stores endpoint values and slopes (the slope is phi itself, so
// it is exact); between nodes a cubic Hermite interpolant is used, refined
// until it agrees with quadrature at the panel midpoint to `tol`. Queries
// outside the cached window fall back to direct quadrature from the nearest
// cached node.
class CachedIntegral1D {
public:
    template <class Phi>
    CachedIntegral1D(Phi phi, double anchor, double lo, double hi,
                     double tol = 1e-11)
        : phi_(std::move(phi)), anchor_(anchor), tol_(tol) {
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw InvalidParams("CachedIntegral1D: bad window");
        build(lo, hi);
    }

    double value(double x) const {
        if (x < xs_.front() || x > xs_.back()) return direct_from_edge(x);
        // binary search for the panel
        std::size_t lo = 0, hi = xs_.size() - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (xs_[mid] <= x)
                lo = mid;
            else
                hi = mid;
        }
        return hermite(lo, x);
    }

    double derivative(double x) const { return phi_(x); }

    double lo() const { return xs_.front(); }
    double hi() const { return xs_.back(); }

private:
    std::function<double(double)> phi_;
    double anchor_;
    double tol_;
    std::vector<double> xs_, vs_, ds_;   // nodes, values, slopes

    double panel_integral(double a, double b) const {
        quad::Result r = quad::gl_doubling(phi_, a, b, 0.25 * tol_, 16, 512);
        if (r.converged) return r.value;
        quad::Result t = quad::tanh_sinh(phi_, a, b, 0.25 * tol_);
        if (t.converged) return t.value;
        if (t.error < r.error) r = t;
        // Panels abutting a domain-edge singularity carry huge mass and can
        // only be resolved to a relative accuracy set by coordinate
        // cancellation; they feed ceiling probes, not annulus values.
        if (r.error <= 1e-5 * std::abs(r.value)) return r.value;
        throw ToleranceNotMet("CachedIntegral1D: panel quadrature stuck");
    }

    double hermite(std::size_t i, double x) const {
        double h = xs_[i + 1] - xs_[i];
        double t = (x - xs_[i]) / h;
        double t2 = t * t, t3 = t2 * t;
        return vs_[i] * (2 * t3 - 3 * t2 + 1) + ds_[i] * h * (t3 - 2 * t2 + t) +
               vs_[i + 1] * (-2 * t3 + 3 * t2) + ds_[i + 1] * h * (t3 - t2);
    }

    void build(double lo, double hi) {
        // Refine panels until the cubic Hermite midpoint error passes tol
        // relative to the local panel mass, so a window edge that sits next
        // to an integrand singularity refines geometrically instead of
        // demanding an impossible absolute accuracy there.
        struct Panel {
            double a, b;
        };
        std::vector<double> seed{lo, hi};
        const int init = 64;
        for (int i = 1; i < init; ++i)
            seed.push_back(lo + (hi - lo) * i / init);
        if (anchor_ > lo && anchor_ < hi) seed.push_back(anchor_);
        std::sort(seed.begin(), seed.end());
        seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

        std::vector<Panel> todo, accepted;
        for (std::size_t i = 0; i + 1 < seed.size(); ++i)
            todo.push_back({seed[i], seed[i + 1]});
        std::size_t splits = 0;
        while (!todo.empty()) {
            Panel p = todo.back();
            todo.pop_back();
            const double mid = 0.5 * (p.a + p.b);
            const double ia = panel_integral(p.a, mid);
            const double whole = ia + panel_integral(mid, p.b);
            const double h = p.b - p.a;
            const double interp = phi_(p.a) * h * 0.125 + 0.5 * whole -
                                  phi_(p.b) * h * 0.125;
            const double scale = 1.0 + std::abs(ia) + std::abs(whole);
            if (std::abs(interp - ia) > tol_ * scale && h > 1e-12 &&
                splits < 20000) {
                ++splits;
                todo.push_back({p.a, mid});
                todo.push_back({mid, p.b});
            } else {
                accepted.push_back(p);
            }
        }
        xs_.clear();
        for (const Panel& p : accepted) {
            xs_.push_back(p.a);
            xs_.push_back(p.b);
        }
        std::sort(xs_.begin(), xs_.end());
        xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());

        vs_.assign(xs_.size(), 0.0);
        ds_.assign(xs_.size(), 0.0);
        for (std::size_t i = 0; i < xs_.size(); ++i) ds_[i] = phi_(xs_[i]);

        // Accumulate outward from the node nearest the anchor so the values
        // around it never absorb rounding noise from far, large panels.
        std::size_t ai = 0;
        for (std::size_t i = 1; i < xs_.size(); ++i)
            if (std::abs(xs_[i] - anchor_) < std::abs(xs_[ai] - anchor_))
                ai = i;
        for (std::size_t i = ai + 1; i < xs_.size(); ++i)
            vs_[i] = vs_[i - 1] + panel_integral(xs_[i - 1], xs_[i]);
        for (std::size_t i = ai; i-- > 0;)
            vs_[i] = vs_[i + 1] - panel_integral(xs_[i], xs_[i + 1]);

        // Shift so that the value at the anchor is zero.
        double at_anchor;
        if (anchor_ >= xs_.front() && anchor_ <= xs_.back()) {
            std::size_t lo_i = 0, hi_i = xs_.size() - 1;
            while (hi_i - lo_i > 1) {
                std::size_t mid = (lo_i + hi_i) / 2;
                if (xs_[mid] <= anchor_)
                    lo_i = mid;
                else
                    hi_i = mid;
            }
            at_anchor = hermite(lo_i, anchor_);
        } else {
            at_anchor = vs_.front() - direct(anchor_, xs_.front());
        }
        for (double& v : vs_) v -= at_anchor;
    }

    double direct(double a, double b) const {
        if (a == b) return 0.0;
        double sgn = 1.0;
        if (a > b) {
            std::swap(a, b);
            sgn = -1.0;
        }
        // split long tails into octave panels to keep adaptivity local
        double total = 0.0;
        double span = b - a;
        if (span <= 2.0 * (std::abs(a) + 1.0)) return sgn * panel_sum(a, b);
        double x = a;
        while (x < b) {
            double next = std::min(b, (std::abs(x) + 1.0) * 2.0 + x);
            total += panel_sum(x, next);
            x = next;
        }
        return sgn * total;
    }

    double panel_sum(double a, double b) const {
        quad::Result r = quad::adaptive_gl(phi_, a, b, tol_);
        if (r.converged) return r.value;
        quad::Result t = quad::tanh_sinh(phi_, a, b, tol_);
        if (t.converged) return t.value;
        if (t.error < r.error) r = t;
        if (r.error <= 1e-5 * std::abs(r.value)) return r.value;
        throw ToleranceNotMet("CachedIntegral1D: tail quadrature stuck");
    }

    double direct_from_edge(double x) const {
        if (x < xs_.front()) return vs_.front() - direct(x, xs_.front());
        return vs_.back() + direct(xs_.back(), x);
    }
};

} // namespace ptwave
