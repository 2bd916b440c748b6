#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "errors.hpp"
#include "planar_model.hpp"

namespace ptwave {

struct ZeroRecord {
    double h_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double derivative_estimate = 0.0;
    bool simple = false;
    double refinement_error = 0.0;   // half-width of the final bracket
};

struct ZeroScan {
    std::vector<ZeroRecord> zeros;
    std::vector<std::string> warnings;
};

// Walks a sampled Melnikov curve for sign changes, refines each by a
// secant/bisection hybrid on fresh quadrature evaluations, and certifies
// simplicity against a noise floor derived from the quadrature error.
template <class Pert>
ZeroScan find_zeros(const PlanarModel& m, Pert&& pert,
                    const MelnikovCurve& curve, double quad_tol = 1e-10) {
    const auto& S = curve.samples;
    if (S.size() < 2)
        throw InvalidParams("find_zeros: need at least two curve samples");
    ZeroScan out;
    double top = std::isfinite(m.h_ceiling()) ? m.h_ceiling() : curve.h_hi;
    const double h_tol = 1e-9 * top;
    auto eval = [&](double h) { return melnikov_point(m, pert, h, quad_tol); };

    const std::size_t n = S.size();
    std::vector<bool> small(n);
    for (std::size_t i = 0; i < n; ++i)
        small[i] = std::abs(S[i].M) <= 3.0 * S[i].quad_error;

    struct Job {
        std::size_t lo, hi;
    };
    std::vector<Job> jobs;
    std::vector<bool> consumed(n, false);   // interval i = [S_i, S_i+1]

    // A sample sitting in the quadrature noise with clean, opposite-signed
    // neighbours is a zero straddled by the node; widen the bracket one
    // sample each way. Same-signed neighbours indicate tangential contact.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!small[i]) continue;
        if (small[i - 1] || small[i + 1]) continue;
        bool opposite = (S[i - 1].M > 0.0) != (S[i + 1].M > 0.0);
        if (opposite) {
            jobs.push_back(Job{i - 1, i + 1});
            consumed[i - 1] = consumed[i] = true;
        } else {
            out.warnings.push_back(
                "possible tangential (non-simple) contact near h = " +
                std::to_string(S[i].h) + "; not counted as a zero");
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (consumed[i]) continue;
        bool change = (S[i].M > 0.0) != (S[i + 1].M > 0.0);
        if (!change) continue;
        if (small[i] || small[i + 1])
            throw AmbiguousSignChange(
                "find_zeros: |M| within 3x quadrature error at a sign change "
                "near h = " + std::to_string(S[i].h) +
                "; refine the grid or tighten the tolerance");
        jobs.push_back(Job{i, i + 1});
    }

    for (const Job& job : jobs) {
        double a = S[job.lo].h, b = S[job.hi].h;
        double fa = S[job.lo].M, fb = S[job.hi].M;
        int iter = 0;
        while (b - a > h_tol && iter < 120) {
            double mid;
            if (iter % 2 == 0 && fb != fa) {
                mid = b - fb * (b - a) / (fb - fa);   // secant
                double guard = 0.01 * (b - a);
                if (!(mid > a + guard && mid < b - guard))
                    mid = 0.5 * (a + b);
            } else {
                mid = 0.5 * (a + b);
            }
            double fm = eval(mid).M;
            if (fm == 0.0) {
                double w = std::max(0.5 * h_tol, 1e-300);
                a = mid - w;
                b = mid + w;
                break;
            }
            if ((fm > 0.0) == (fa > 0.0)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
                fb = fm;
            }
            ++iter;
        }

        ZeroRecord rec;
        rec.h_star = 0.5 * (a + b);
        rec.bracket_lo = S[job.lo].h;
        rec.bracket_hi = S[job.hi].h;
        rec.refinement_error = 0.5 * (b - a);

        double delta = 1e-5 * rec.h_star;
        MelnikovSample up = eval(rec.h_star + delta);
        MelnikovSample dn = eval(rec.h_star - delta);
        rec.derivative_estimate = (up.M - dn.M) / (2.0 * delta);
        double floor = std::max(
            1e-8, 10.0 * (up.quad_error + dn.quad_error) / (2.0 * delta));
        rec.simple = std::abs(rec.derivative_estimate) > floor;
        // The crossing direction must agree with the derivative sign.
        if (rec.simple && ((S[job.hi].M - S[job.lo].M > 0.0) !=
                           (rec.derivative_estimate > 0.0)))
            out.warnings.push_back(
                "derivative sign disagrees with the crossing direction at "
                "h = " + std::to_string(rec.h_star));
        out.zeros.push_back(rec);
    }

    // Jobs were generated widened-first; restore increasing order in h.
    std::sort(out.zeros.begin(), out.zeros.end(),
              [](const ZeroRecord& x, const ZeroRecord& y) {
                  return x.h_star < y.h_star;
              });
    return out;
}

} // namespace ptwave
