#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "errors.hpp"
#include "planar_model.hpp"
#include "zerofind.hpp"

namespace ptwave {

struct BasisExponent {
    int q = 0;
    int p = 1;
};

struct BasisCurves {
    std::vector<BasisExponent> exponents;
    std::vector<double> h_grid;
    // J[j][i] = clockwise integral of x^(2q_j) y^(2p_j - 1) dx at h_grid[i]
    std::vector<std::vector<double>> J;
};

namespace detail {

inline void check_exponents(const std::vector<BasisExponent>& exps) {
    std::set<int> weights;
    for (const BasisExponent& e : exps) {
        if (e.p < 1 || e.q < 0)
            throw InvalidParams("basis exponents need p >= 1, q >= 0");
        if (!weights.insert(e.q + e.p).second)
            throw DuplicateWeight("basis exponents must have distinct "
                                  "weights q + p (got a repeat of " +
                                  std::to_string(e.q + e.p) + ")");
    }
}

} // namespace detail

// Samples the monomial basis integrals J_j over a common grid. Each curve is
// strictly positive: with the clockwise orientation the integral equals the
// area integral of (2p-1) x^(2q) y^(2p-2) over the oval's interior.
inline BasisCurves basis_curves(const PlanarModel& m,
                                const std::vector<BasisExponent>& exps,
                                const std::vector<double>& h_grid,
                                double abs_tol = 1e-10) {
    detail::check_exponents(exps);
    BasisCurves out;
    out.exponents = exps;
    out.h_grid = h_grid;
    out.J.assign(exps.size(), std::vector<double>(h_grid.size(), 0.0));
    for (std::size_t j = 0; j < exps.size(); ++j) {
        MonomialPerturbation mono{{MonomialTerm{exps[j].q, exps[j].p, 1.0}}};
        for (std::size_t i = 0; i < h_grid.size(); ++i) {
            Oval oval = make_oval(m, h_grid[i]);
            double v = integrate_oval(oval, mono, abs_tol);
            if (!(v > 0.0))
                throw NumericError("basis_curves: J was not positive at h = " +
                                   std::to_string(h_grid[i]));
            out.J[j][i] = v;
        }
    }
    return out;
}

struct Design {
    MonomialPerturbation perturbation;
    std::vector<double> coefficients;   // scaled so max |d_j| = 1
    double condition_estimate = 0.0;
    std::vector<ZeroRecord> verified;   // one per target, in target order
    std::vector<double> residuals;      // relative offsets zero vs target
};

namespace detail {

// Null vector of an l x (l+1) matrix by Gaussian elimination with complete
// pivoting. Also reports max/min pivot magnitude as a conditioning estimate.
inline std::vector<double> null_vector(std::vector<std::vector<double>> G,
                                       double& cond_estimate) {
    const std::size_t rows = G.size();
    const std::size_t cols = rows + 1;
    std::vector<std::size_t> col_of(cols);
    for (std::size_t j = 0; j < cols; ++j) col_of[j] = j;
    double p_max = 0.0, p_min = 0.0;
    for (std::size_t k = 0; k < rows; ++k) {
        std::size_t pr = k, pc = k;
        double best = 0.0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (std::abs(G[i][j]) > best) {
                    best = std::abs(G[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0.0) {
            cond_estimate = kInf;
            throw IllConditioned("null_vector: rank-deficient collocation "
                                 "matrix");
        }
        std::swap(G[k], G[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(G[i][k], G[i][pc]);
        std::swap(col_of[k], col_of[pc]);
        if (k == 0) p_max = p_min = best;
        p_max = std::max(p_max, best);
        p_min = std::min(p_min, best);
        for (std::size_t i = k + 1; i < rows; ++i) {
            double fac = G[i][k] / G[k][k];
            for (std::size_t j = k; j < cols; ++j) G[i][j] -= fac * G[k][j];
        }
    }
    cond_estimate = p_max / p_min;
    // Free variable is the last permuted column; back-substitute.
    std::vector<double> v(cols, 0.0);
    v[cols - 1] = 1.0;
    for (std::size_t k = rows; k-- > 0;) {
        double acc = 0.0;
        for (std::size_t j = k + 1; j < cols; ++j) acc += G[k][j] * v[j];
        v[k] = -acc / G[k][k];
    }
    std::vector<double> d(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) d[col_of[j]] = v[j];
    return d;
}

} // namespace detail

// Chooses coefficients d_j so that sum_j d_j x^(2q_j) y^(2p_j-1) has a
// Melnikov zero at every target energy, by collocating the basis integrals
// at the targets and extracting the null direction. The design is then
// re-verified end to end with find_zeros before being returned.
inline Design place_zeros(const PlanarModel& m,
                          const std::vector<BasisExponent>& exps,
                          const std::vector<double>& targets,
                          double abs_tol = 1e-10) {
    detail::check_exponents(exps);
    const std::size_t l = targets.size();
    if (exps.size() != l + 1)
        throw InvalidParams("place_zeros: need exactly one more basis term "
                            "than targets");
    if (l == 0) throw InvalidParams("place_zeros: no targets");
    double top = m.h_ceiling();
    for (std::size_t i = 0; i < l; ++i) {
        if (i > 0 && !(targets[i] > targets[i - 1]))
            throw InvalidParams("place_zeros: targets must be strictly "
                                "increasing");
        if (!(targets[i] > 0.0) || !(targets[i] < top))
            throw EnergyOutOfRange("place_zeros: target outside (0, "
                                   "h_ceiling)");
        if (std::isfinite(top) &&
            (targets[i] < 0.01 * top || targets[i] > 0.99 * top))
            throw InvalidParams("place_zeros: target within 1% of an end of "
                                "the annulus energy range");
    }

    // Collocation matrix at the exact targets.
    std::vector<std::vector<double>> G(l, std::vector<double>(l + 1, 0.0));
    for (std::size_t i = 0; i < l; ++i) {
        Oval oval = make_oval(m, targets[i]);
        for (std::size_t j = 0; j < l + 1; ++j) {
            MonomialPerturbation mono{
                {MonomialTerm{exps[j].q, exps[j].p, 1.0}}};
            G[i][j] = integrate_oval(oval, mono, abs_tol);
        }
    }
    Design design;
    std::vector<double> d = detail::null_vector(G, design.condition_estimate);
    if (design.condition_estimate > 1e12) {
        std::ostringstream msg;
        msg << "place_zeros: collocation matrix condition estimate "
            << design.condition_estimate << " exceeds 1e12; matrix:";
        for (std::size_t i = 0; i < l; ++i) {
            msg << "\n ";
            for (std::size_t j = 0; j < l + 1; ++j) msg << " " << G[i][j];
        }
        throw IllConditioned(msg.str());
    }
    std::size_t top_j = 0;
    for (std::size_t j = 1; j < d.size(); ++j)
        if (std::abs(d[j]) > std::abs(d[top_j])) top_j = j;
    double scale = d[top_j];
    for (double& dj : d) dj /= scale;
    design.coefficients = d;
    for (std::size_t j = 0; j < d.size(); ++j)
        design.perturbation.terms.push_back(
            MonomialTerm{exps[j].q, exps[j].p, d[j]});

    // End-to-end verification on a dense grid spanning the targets.
    double g_lo = targets.front() / 4.0;
    double g_hi = 4.0 * targets.back();
    if (std::isfinite(top)) g_hi = std::min(g_hi, 0.999 * top);
    int n_grid = 257;
    std::vector<double> grid(n_grid);
    for (int i = 0; i < n_grid; ++i)
        grid[i] = g_lo * std::pow(g_hi / g_lo, double(i) / (n_grid - 1));
    MelnikovCurve curve =
        melnikov_curve(m, design.perturbation, grid, abs_tol);
    ZeroScan scan = find_zeros(m, design.perturbation, curve, abs_tol);

    design.residuals.assign(l, kInf);
    design.verified.assign(l, ZeroRecord{});
    for (std::size_t i = 0; i < l; ++i) {
        for (const ZeroRecord& z : scan.zeros) {
            double rel = std::abs(z.h_star - targets[i]) / targets[i];
            if (rel < design.residuals[i]) {
                design.residuals[i] = rel;
                design.verified[i] = z;
            }
        }
    }
    std::size_t extra_inside = 0;
    for (const ZeroRecord& z : scan.zeros) {
        bool matched = false;
        for (std::size_t i = 0; i < l; ++i)
            if (design.verified[i].h_star == z.h_star &&
                design.residuals[i] <= 1e-3)
                matched = true;
        if (!matched && z.h_star > targets.front() / 2.0 &&
            z.h_star < targets.back() * 2.0)
            ++extra_inside;
    }
    for (std::size_t i = 0; i < l; ++i) {
        if (design.residuals[i] > 1e-3) {
            std::ostringstream msg;
            msg << "place_zeros: verification missed target " << targets[i]
                << " (best relative offset " << design.residuals[i] << ")";
            throw IllConditioned(msg.str());
        }
        if (!design.verified[i].simple)
            throw IllConditioned("place_zeros: verified zero near target is "
                                 "not certified simple");
    }
    if (extra_inside > 0)
        throw IllConditioned("place_zeros: spurious extra zeros appeared "
                             "between the targets");
    return design;
}

} // namespace ptwave
