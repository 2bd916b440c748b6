#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ptwave {
namespace quad {

struct Result {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    std::size_t evals = 0;
    bool converged = false;
};

struct GLRule {
    std::vector<double> node;   // on (-1, 1)
    std::vector<double> weight;
};

namespace detail {

// Legendre P_n(x) and its derivative via the three-term recurrence.
inline std::pair<double, double> legendre_pd(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double d = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, d};
}

inline GLRule build_gl_rule(int n) {
    GLRule r;
    r.node.resize(n);
    r.weight.resize(n);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double d = 0.0;
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre_pd(n, x);
            d = dp;
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                auto [p2, dp2] = legendre_pd(n, x);
                d = dp2;
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * d * d);
        r.node[i] = -x;
        r.weight[i] = w;
        r.node[n - 1 - i] = x;
        r.weight[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.node[n / 2] = 0.0;
    return r;
}

} // namespace detail

// Nodes are cached per order; safe to call from several threads.
inline const GLRule& gl_rule(int n) {
    static std::map<int, GLRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, detail::build_gl_rule(n)).first;
    return it->second;
}

template <class F>
double gl(F&& f, double a, double b, int n) {
    const GLRule& r = gl_rule(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += r.weight[i] * f(mid + half * r.node[i]);
    return acc * half;
}

// Gauss-Legendre with node doubling; error from the last difference.
template <class F>
Result gl_doubling(F&& f, double a, double b, double abs_tol,
                   int n0 = 32, int n_max = 4096) {
    Result res;
    double prev = gl(f, a, b, n0);
    res.evals = static_cast<std::size_t>(n0);
    for (int n = 2 * n0; n <= n_max; n *= 2) {
        double cur = gl(f, a, b, n);
        res.evals += static_cast<std::size_t>(n);
        res.value = cur;
        res.error = std::abs(cur - prev);
        if (res.error <= abs_tol) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

// Globally adaptive bisection, GL(16)/GL(32) difference per panel. Fallback
// for integrands with sharp interior features.
template <class F>
Result adaptive_gl(F&& f, double a, double b, double abs_tol,
                   int max_panels = 4000) {
    struct Panel {
        double a, b, value, error;
    };
    auto eval_panel = [&](double pa, double pb) {
        Panel p;
        p.a = pa;
        p.b = pb;
        double c = gl(f, pa, pb, 16);
        double fine = gl(f, pa, pb, 32);
        p.value = fine;
        p.error = std::abs(fine - c);
        return p;
    };
    std::vector<Panel> panels{eval_panel(a, b)};
    Result res;
    res.evals = 48;
    for (int iter = 0; iter < max_panels; ++iter) {
        double total_err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            total_err += panels[i].error;
            if (panels[i].error > panels[worst].error) worst = i;
        }
        if (total_err <= abs_tol) {
            res.converged = true;
            break;
        }
        Panel w = panels[worst];
        double m = 0.5 * (w.a + w.b);
        if (m <= w.a || m >= w.b) break;  // interval exhausted
        panels[worst] = eval_panel(w.a, m);
        panels.push_back(eval_panel(m, w.b));
        res.evals += 96;
    }
    res.value = 0.0;
    res.error = 0.0;
    for (const Panel& p : panels) {
        res.value += p.value;
        res.error += p.error;
    }
    return res;
}

// tanh-sinh rule on (a,b); robust against integrable endpoint singularities.
template <class F>
Result tanh_sinh(F&& f, double a, double b, double abs_tol,
                 int max_level = 12) {
    const double pi_half = 1.57079632679489661923;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const double t_max = 6.1;  // exp(pi*sinh t) overflows past this
    Result res;
    // Abscissae are kept as offsets from the nearer endpoint so they retain
    // full relative precision next to integrable singularities:
    // 1 - tanh(y) = 2 e^{-2y} / (1 + e^{-2y}).
    auto pair_sum = [&](double t) {
        const double y = pi_half * std::sinh(t);
        const double e = std::exp(-2.0 * y);
        const double opp = 2.0 * e / (1.0 + e);
        const double w =
            pi_half * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        const double lo = a + half * opp;
        const double hi = b - half * opp;
        double acc = 0.0;
        if (lo > a && lo < b) {
            acc += f(lo);
            ++res.evals;
        }
        if (hi > a && hi < b) {
            acc += f(hi);
            ++res.evals;
        }
        return w * acc;
    };
    double h = 1.0;
    double sum = pi_half * f(mid);
    ++res.evals;
    for (double t = h; t <= t_max; t += h) sum += pair_sum(t);
    double prev = sum * h * half;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= t_max; t += 2.0 * h) add += pair_sum(t);
        sum += add;
        double cur = sum * h * half;
        res.value = cur;
        res.error = std::abs(cur - prev);
        if (level >= 3 && res.error <= abs_tol) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

} // namespace quad
} // namespace ptwave
