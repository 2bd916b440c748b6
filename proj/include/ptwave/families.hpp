#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cached_integral.hpp"
#include "errors.hpp"
#include "planar_model.hpp"
#include "abelian.hpp"

namespace ptwave {

enum class Family {
    Toy,
    Ostrovsky,
    KleinGordon,
    SineGordon,
    GenKdV,
    RosenauHyman,
    CamassaHolmClass,
    Boussinesq,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Toy: return "toy";
        case Family::Ostrovsky: return "ostrovsky";
        case Family::KleinGordon: return "klein_gordon";
        case Family::SineGordon: return "sine_gordon";
        case Family::GenKdV: return "gen_kdv";
        case Family::RosenauHyman: return "rosenau_hyman";
        case Family::CamassaHolmClass: return "camassa_holm_class";
        default: return "boussinesq";
    }
}

// A traveling-wave reduction instantiated at concrete parameters: the planar
// model of the unperturbed wave ODE plus the perturbation as it enters the
// second equation of the rescaled system, y' = -H_x + eps*pert_integrand.
struct FamilyInstance {
    Family family;
    std::map<std::string, double> params;
    PlanarModel model;
    std::function<double(double, double)> pert_integrand;
};

// Family-level perturbation slice g_c(x, y) at eps = 0, in the normalization
// of the corresponding reduction (signs and speed divisors already applied).
using Gc = std::function<double(double, double)>;

inline Gc zero_gc() {
    return [](double, double) { return 0.0; };
}

// Replaces the perturbation with an integrand-level monomial sum (the form
// the designer emits); the model is untouched.
inline void set_monomial_perturbation(FamilyInstance& fi,
                                      MonomialPerturbation mono) {
    fi.pert_integrand = std::move(mono);
}

// ---------------------------------------------------------------------------
// toy family:  u + a u_xx + b u_xt + d u_tt + eps g = 0.
// Wave frame: U'' = -U/C^2 + eps g_c(U', eps), C^2 = a - b c + d c^2, and
// g_c(y, eps) collects the transformed perturbation. The constructor takes
// the odd coefficients of g_c(y, 0) = sum g_odd[i] y^(2i+1).

// int_0^{2pi} sin^(2n)
inline double toy_I2n(int n) {
    const double pi = 3.14159265358979323846;
    double v = 2.0 * pi;
    for (int i = 1; i <= n; ++i) v *= (2.0 * i - 1.0) / (2.0 * i);
    return v;
}

// Closed-form reference curve M(h) = -2 C h sum_i g_odd[i] 2^i I_{2i+2} h^i.
inline double toy_reference_melnikov(double C, const std::vector<double>& g_odd,
                                     double h) {
    double acc = 0.0, pw = 1.0;
    for (std::size_t i = 0; i < g_odd.size(); ++i) {
        acc += g_odd[i] * pw * toy_I2n(static_cast<int>(i) + 1);
        pw *= 2.0 * h;
    }
    return -2.0 * C * h * acc;
}

inline FamilyInstance make_toy(double a, double b, double d, double c,
                               std::vector<double> g_odd) {
    double C2 = a - b * c + d * c * c;
    if (!(C2 > 0.0))
        throw InvalidSpeed("toy: a - b c + d c^2 must be positive");
    SeparableParts parts;
    parts.A = constant_field(0.5);
    parts.B = polynomial_field({0.0, 0.0, 1.0 / (2.0 * C2)});
    PlanarModel model =
        make_separable_model(std::move(parts), 0.0, whole_plane(), kInf);
    auto pert = [g_odd](double, double y) {
        double acc = 0.0, yp = y;
        for (double gi : g_odd) {
            acc += gi * yp;
            yp *= y * y;
        }
        return acc;
    };
    FamilyInstance fi{Family::Toy,
                      {{"a", a}, {"b", b}, {"d", d}, {"c", c},
                       {"C", std::sqrt(C2)}},
                      std::move(model), pert};
    return fi;
}

// ---------------------------------------------------------------------------
// Ostrovsky (reduced):  (u_t + u u_x)_x - u + eps g = 0.
// Wave frame: (U - c) U'' + (U')^2 - U + eps g = 0 on {U < c}; the rescaled
// system has H = (x-c)^2 y^2/2 + c x^2/2 - x^3/3 and time factor
// s = (x-c)^(-2). The perturbation enters as (x-c)^2 g_c.

inline FamilyInstance make_ostrovsky(double c, Gc gc) {
    if (!(c > 0.0)) throw InvalidParams("ostrovsky: need c > 0");
    SeparableParts parts;
    parts.A = polynomial_field({0.5 * c * c, -c, 0.5});
    parts.B = polynomial_field({0.0, 0.0, 0.5 * c, -1.0 / 3.0});
    Domain dom;
    dom.x_hi = c;
    PlanarModel model =
        make_separable_model(std::move(parts), 0.0, dom, kInf);
    AnnulusInfo info = analyze_annulus(model);
    model.set_h_ceiling(info.h_ceiling);
    model.set_annulus_limits(info.x_lo_limit, info.x_hi_limit);
    auto pert = [c, gc](double x, double y) {
        double w = x - c;
        return w * w * gc(x, y);
    };
    return FamilyInstance{Family::Ostrovsky, {{"c", c}}, std::move(model),
                          pert};
}

// ---------------------------------------------------------------------------
// Klein-Gordon:  u_tt - u_xx + lambda u^p + eps g = 0, lambda > 0, p odd.
// Wave frame: U'' = -C U^p + eps g_c, C = lambda/(c^2 - 1); needs c^2 > 1.

inline FamilyInstance make_klein_gordon(double lambda, int p_exp, double c,
                                        Gc gc) {
    if (!(lambda > 0.0)) throw InvalidParams("klein_gordon: need lambda > 0");
    if (p_exp < 1 || p_exp % 2 == 0)
        throw InvalidParams("klein_gordon: exponent must be a positive odd "
                            "integer");
    if (!(c * c > 1.0))
        throw InvalidSpeed("klein_gordon: need c^2 > 1");
    double C = lambda / (c * c - 1.0);
    std::vector<double> coeffs(p_exp + 2, 0.0);
    coeffs[p_exp + 1] = C / (p_exp + 1);
    SeparableParts parts;
    parts.A = constant_field(0.5);
    parts.B = polynomial_field(coeffs);
    PlanarModel model =
        make_separable_model(std::move(parts), 0.0, whole_plane(), kInf);
    return FamilyInstance{Family::KleinGordon,
                          {{"lambda", lambda},
                           {"p", double(p_exp)},
                           {"c", c},
                           {"C", C}},
                          std::move(model), gc};
}

// ---------------------------------------------------------------------------
// sine-Gordon:  u_tt - u_xx + sin u + eps g = 0, c^2 > 1.
// Wave frame: U'' = -C sin U + eps g_c, C = 1/(c^2 - 1). Saddles at +-pi cap
// the annulus at exactly 2C.

inline FamilyInstance make_sine_gordon(double c, Gc gc) {
    if (!(c * c > 1.0)) throw InvalidSpeed("sine_gordon: need c^2 > 1");
    double C = 1.0 / (c * c - 1.0);
    SeparableParts parts;
    parts.A = constant_field(0.5);
    parts.B = make_field([C](double x) { return C * (1.0 - std::cos(x)); },
                         [C](double x) { return C * std::sin(x); },
                         [C](double x) { return C * std::cos(x); });
    const double pi = 3.14159265358979323846;
    PlanarModel model =
        make_separable_model(std::move(parts), 0.0, whole_plane(), 2.0 * C);
    model.set_annulus_limits(-pi, pi);
    return FamilyInstance{Family::SineGordon, {{"c", c}, {"C", C}},
                          std::move(model), gc};
}

// ---------------------------------------------------------------------------
// Quadratic restoring core shared by gen_kdv and boussinesq:
//   U'' = alpha + beta U + gamma U^2 + eps g_c.
// Needs two distinct real equilibria, one center and one saddle.

namespace detail {

struct QuadraticCore {
    PlanarModel model;
    double center = 0.0, saddle = 0.0;
};

inline QuadraticCore make_quadratic_core(double alpha, double beta,
                                         double gamma) {
    double scale = std::abs(alpha) + std::abs(beta) + 1.0;
    if (std::abs(gamma) <= 1e-14 * scale)
        throw NoPeriodAnnulus("quadratic restoring term degenerates to a "
                              "line: no center/saddle pair");
    double disc = beta * beta - 4.0 * gamma * alpha;
    if (!(disc > 0.0))
        throw NoPeriodAnnulus("no two distinct real equilibria");
    double sq = std::sqrt(disc);
    double qq = -0.5 * (beta + (beta >= 0.0 ? sq : -sq));
    double r1 = qq / gamma;
    double r2 = (qq != 0.0) ? alpha / qq : -beta / gamma - r1;
    double s1 = beta + 2.0 * gamma * r1;
    double s2 = beta + 2.0 * gamma * r2;
    double slope_scale = std::abs(beta) + 2.0 * std::abs(gamma) *
                                              std::max(std::abs(r1),
                                                       std::abs(r2));
    double center, saddle;
    if (s1 < -1e-12 * slope_scale && s2 > 1e-12 * slope_scale) {
        center = r1;
        saddle = r2;
    } else if (s2 < -1e-12 * slope_scale && s1 > 1e-12 * slope_scale) {
        center = r2;
        saddle = r1;
    } else {
        throw NoPeriodAnnulus("equilibria do not split into a center and a "
                              "saddle");
    }
    // B(x) = -alpha x - beta x^2/2 - gamma x^3/3, shifted to vanish at the
    // center.
    auto B_raw = [&](double x) {
        return -x * (alpha + x * (0.5 * beta + x * gamma / 3.0));
    };
    double Bc = B_raw(center);
    SeparableParts parts;
    parts.A = constant_field(0.5);
    parts.B = polynomial_field({-Bc, -alpha, -0.5 * beta, -gamma / 3.0});
    double ceiling = B_raw(saddle) - Bc;
    PlanarModel model =
        make_separable_model(std::move(parts), center, whole_plane(), ceiling);
    if (saddle > center)
        model.set_annulus_limits(-kInf, saddle);
    else
        model.set_annulus_limits(saddle, kInf);
    return QuadraticCore{std::move(model), center, saddle};
}

} // namespace detail

// gen_kdv:  u_t + a u_x + b u u_x + d u u_t + p u_xxx + q u_xxt + r u_xtt
//           + s u_ttt + eps (grad g . (u_x, u_xx, u_xt, 0)) = 0.
// Integrated wave frame: C U'' = k - (a-c) U - ((b-dc)/2) U^2 - eps g with
// C = p - q c + r c^2 - s c^3, i.e. U'' = alpha + beta x + gamma x^2 + eps g_c
// with alpha = k/C, beta = (c-a)/C, gamma = (dc-b)/C.

inline FamilyInstance make_gen_kdv(double a, double b, double d, double p,
                                   double q, double r, double s, double c,
                                   double k, Gc gc) {
    double scale = std::abs(p) + std::abs(q * c) + std::abs(r * c * c) +
                   std::abs(s * c * c * c);
    double C = p - q * c + r * c * c - s * c * c * c;
    if (scale == 0.0 || std::abs(C) <= 1e-14 * scale)
        throw ZeroDispersion("gen_kdv: p - q c + r c^2 - s c^3 vanishes");
    detail::QuadraticCore core =
        detail::make_quadratic_core(k / C, (c - a) / C, (d * c - b) / C);
    return FamilyInstance{Family::GenKdV,
                          {{"a", a}, {"b", b}, {"d", d}, {"p", p}, {"q", q},
                           {"r", r}, {"s", s}, {"c", c}, {"k", k}, {"C", C},
                           {"center", core.center}, {"saddle", core.saddle}},
                          std::move(core.model), gc};
}

// Classical KdV as a preset of gen_kdv: a = d = q = r = s = 0, b = -6, p = 1.
inline FamilyInstance make_kdv(double c, double k, Gc gc) {
    return make_gen_kdv(0.0, -6.0, 0.0, 1.0, 0.0, 0.0, 0.0, c, k,
                        std::move(gc));
}

// boussinesq:  a u_xx + b u_xt + d u_tt + 2e (u u_xx + u_x^2) + p u_xxxx
//              + q u_xxxt + r u_xxtt + s u_xttt + f u_tttt + eps G = 0,
// G = (g_c(u, u_x))_xx. Twice-integrated wave frame:
//   C U + e U^2 + D U'' + eps g_c = k,
// C = a - b c + d c^2, D = p - q c + r c^2 - s c^3 + f c^4; identical to the
// gen_kdv core with alpha = k/D, beta = -C/D, gamma = -e/D.

inline FamilyInstance make_boussinesq(double a, double b, double d, double e,
                                      double p, double q, double r, double s,
                                      double f, double c, double k, Gc gc) {
    double scale = std::abs(p) + std::abs(q * c) + std::abs(r * c * c) +
                   std::abs(s * c * c * c) + std::abs(f * c * c * c * c);
    double D = p - q * c + r * c * c - s * c * c * c + f * c * c * c * c;
    if (scale == 0.0 || std::abs(D) <= 1e-14 * scale)
        throw ZeroDispersion("boussinesq: dispersion polynomial vanishes");
    double C = a - b * c + d * c * c;
    detail::QuadraticCore core =
        detail::make_quadratic_core(k / D, -C / D, -e / D);
    return FamilyInstance{Family::Boussinesq,
                          {{"a", a}, {"b", b}, {"d", d}, {"e", e}, {"p", p},
                           {"q", q}, {"r", r}, {"s", s}, {"f", f}, {"c", c},
                           {"k", k}, {"C", C}, {"D", D},
                           {"center", core.center}, {"saddle", core.saddle}},
                          std::move(core.model), gc};
}

// Classical preset: u_tt + u u_xx - u_xx + u_x^2 - u_xxxx = 0, so a = -1,
// d = 1, 2e = 1, p = -1.
inline FamilyInstance make_boussinesq_classical(double c, double k, Gc gc) {
    return make_boussinesq(-1.0, 0.0, 1.0, 0.5, -1.0, 0.0, 0.0, 0.0, 0.0, c,
                           k, std::move(gc));
}

// ---------------------------------------------------------------------------
// Rosenau-Hyman K(n,n):  u_t + a (u^n)_x + (u^n)_xxx + eps g = 0, n >= 2.
// Wave frame on {U > 0}: n x^(n-1) U'' = k + c x - a x^n - n(n-1) x^(n-2) y^2
// rescaled with s = x^(2(1-n))/n; the perturbation enters as x^(n-1) g_c.

inline FamilyInstance make_rosenau_hyman(double a, double c, double k, int n,
                                         Gc gc) {
    if (n < 2) throw InvalidParams("rosenau_hyman: need integer n >= 2");
    auto restoring = [&](double x) {
        return k + c * x - a * std::pow(x, n);
    };
    // positive equilibria via a log-spaced sign scan
    std::vector<double> roots;
    const int N = 4096;
    double prev_x = 1e-9, prev_f = restoring(prev_x);
    for (int i = 1; i <= N; ++i) {
        double x = 1e-9 * std::pow(1e18, double(i) / N);
        double fx = restoring(x);
        if (prev_f * fx < 0.0)
            roots.push_back(brent(restoring, prev_x, x));
        else if (fx == 0.0 && x > 0.0)
            roots.push_back(x);
        prev_x = x;
        prev_f = fx;
    }
    double center = 0.0;
    bool found = false;
    auto curvature = [&](double x) {
        // B''(x) sign decides: x^(n-2) (a(2n-1)x^n - c n x - k(n-1))
        return std::pow(x, n - 2) *
               (a * (2.0 * n - 1.0) * std::pow(x, n) - c * n * x -
                k * (n - 1.0));
    };
    for (double r : roots) {
        if (curvature(r) > 0.0) {
            center = r;
            found = true;
            break;
        }
    }
    if (!found)
        throw NoCenter("rosenau_hyman: no equilibrium x > 0 with positive "
                       "curvature");
    SeparableParts parts;
    {
        std::vector<double> Ac(2 * n - 1, 0.0);
        Ac[2 * (n - 1)] = 0.5 * n;
        parts.A = polynomial_field(Ac);
        std::vector<double> Bc(2 * n + 1, 0.0);
        Bc[n] = -k / n;
        Bc[n + 1] = -c / (n + 1.0);
        Bc[2 * n] = a / (2.0 * n);
        ScalarField1D Braw = polynomial_field(Bc);
        double shift = Braw.value(center);
        Bc[0] = -shift;
        parts.B = polynomial_field(Bc);
    }
    Domain dom;
    dom.x_lo = 0.0;
    PlanarModel model =
        make_separable_model(std::move(parts), center, dom, kInf);
    AnnulusInfo info = analyze_annulus(model, 100.0 * (1.0 + center));
    model.set_h_ceiling(info.h_ceiling);
    model.set_annulus_limits(info.x_lo_limit, info.x_hi_limit);
    auto pert = [n, gc](double x, double y) {
        return std::pow(x, n - 1) * gc(x, y);
    };
    return FamilyInstance{Family::RosenauHyman,
                          {{"a", a}, {"c", c}, {"k", k}, {"n", double(n)},
                           {"center", center}},
                          std::move(model), pert};
}

// ---------------------------------------------------------------------------
// Camassa-Holm class:
//   u_t + A'(u) u_x + b u_x u_xx + d u u_xxx + p u_xxx + q u_xxt + r u_xtt
//       + s u_ttt + eps (grad g . (u_x, u_xx, u_xt, 0)) = 0.
// Integrated wave frame: A_c(U) + beta (U')^2 + (C + d U) U'' + eps g_c = k,
// A_c(u) = A(u) - c u, beta = (b-d)/2, C = p - q c + r c^2 - s c^3. The time
// factor is s_c = (C + d x)^(-2 beta/d) (or exp(-2 beta x / C) when d = 0)
// and the potential is the cached integral of
// (A_c - k) / ((C + d x) s_c). The perturbation enters as
// g_c / ((C + d x) s_c).

struct CamassaHolmCoeffs {
    ScalarField1D A;   // convective potential, A(0) = 0
    double b = 0.0, d = 0.0;
    double p = 0.0, q = 0.0, r = 0.0, s = 0.0;
};

inline FamilyInstance make_camassa_holm_raw(const CamassaHolmCoeffs& co,
                                            double c, double k, Gc gc,
                                            Family tag = Family::CamassaHolmClass,
                                            std::map<std::string, double>
                                                extra_params = {}) {
    double C = co.p - co.q * c + co.r * c * c - co.s * c * c * c;
    double beta = 0.5 * (co.b - co.d);
    const double d = co.d;
    if (d == 0.0 && C == 0.0)
        throw ZeroDispersion("camassa_holm_class: C = 0 with d = 0");

    std::function<double(double)> s_c, s_c_over;   // s_c and (C+dx)*s_c
    if (d != 0.0) {
        double expo = -2.0 * beta / d;
        s_c = [C, d, expo](double x) { return std::pow(C + d * x, expo); };
    } else {
        s_c = [C, beta](double x) { return std::exp(-2.0 * beta * x / C); };
    }
    auto wsc = [C, d, s_c](double x) { return (C + d * x) * s_c(x); };

    Domain dom;
    if (d > 0.0) dom.x_lo = -C / d;
    if (d < 0.0) dom.x_hi = -C / d;

    const ScalarField1D A = co.A;
    auto A_c = [A, c](double x) { return A.value(x) - c * x; };
    auto A_c_d = [A, c](double x) { return A.derivative(x) - c; };

    // equilibria: A_c(x) = k inside the domain
    auto g0 = [&](double x) { return A_c(x) - k; };
    double margin_lo = std::isfinite(dom.x_lo)
                           ? dom.x_lo + 1e-7 * (1.0 + std::abs(dom.x_lo))
                           : -100.0;
    double margin_hi = std::isfinite(dom.x_hi)
                           ? dom.x_hi - 1e-7 * (1.0 + std::abs(dom.x_hi))
                           : 100.0;
    std::vector<double> roots;
    const int N = 8192;
    double prev_x = margin_lo, prev_f = g0(prev_x);
    for (int i = 1; i <= N; ++i) {
        double x = margin_lo + (margin_hi - margin_lo) * i / N;
        double fx = g0(x);
        if (prev_f * fx < 0.0) roots.push_back(brent(g0, prev_x, x));
        prev_x = x;
        prev_f = fx;
    }
    double center = 0.0;
    bool found = false;
    for (double rt : roots) {
        if (A_c_d(rt) / wsc(rt) > 0.0) {   // H_xx > 0
            center = rt;
            found = true;
            break;
        }
    }
    if (!found)
        throw NoCenter("camassa_holm_class: no center equilibrium of "
                       "A(x) - c x = k in the domain");

    // cached potential, anchored at the center so B(center) = 0 exactly
    auto phi = [A_c, k, wsc](double x) { return (A_c(x) - k) / wsc(x); };
    double far = 0.0;
    for (double rt : roots) far = std::max(far, std::abs(rt - center));
    double W = 4.0 * far + 20.0 * (1.0 + std::abs(center));
    double win_lo = center - W, win_hi = center + W;
    if (std::isfinite(dom.x_lo))
        win_lo = std::max(win_lo, dom.x_lo + 1e-9 * (1.0 + std::abs(dom.x_lo)));
    if (std::isfinite(dom.x_hi))
        win_hi = std::min(win_hi, dom.x_hi - 1e-9 * (1.0 + std::abs(dom.x_hi)));
    auto cache = std::make_shared<CachedIntegral1D>(phi, center, win_lo,
                                                    win_hi, 1e-11);

    auto phi_d = [A_c, A_c_d, k, s_c, wsc, d, beta](double x) {
        double w = wsc(x);
        return (A_c_d(x) * w - (A_c(x) - k) * s_c(x) * (d - 2.0 * beta)) /
               (w * w);
    };
    SeparableParts parts;
    parts.B = make_field([cache](double x) { return cache->value(x); }, phi,
                         phi_d);
    parts.A = make_field(
        [s_c](double x) { return 0.5 / s_c(x); },
        [wsc, beta](double x) { return beta / wsc(x); },
        [s_c, wsc, d, beta](double x) {
            double w = wsc(x);
            return -beta * s_c(x) * (d - 2.0 * beta) / (w * w);
        });
    PlanarModel model = make_separable_model(std::move(parts), center, dom,
                                             kInf);
    AnnulusInfo info = analyze_annulus(model);
    model.set_h_ceiling(info.h_ceiling);
    model.set_annulus_limits(info.x_lo_limit, info.x_hi_limit);

    auto pert = [gc, wsc](double x, double y) { return gc(x, y) / wsc(x); };
    std::map<std::string, double> params = std::move(extra_params);
    params["b"] = co.b;
    params["d"] = co.d;
    params["c"] = c;
    params["k"] = k;
    params["C"] = C;
    params["beta"] = beta;
    params["center"] = center;
    return FamilyInstance{tag, std::move(params), std::move(model), pert};
}

// Presets: camassa_holm (A = 2 kappa u + 3u^2/2, b=-2, d=1, q=-1),
// degasperis_procesi (A = 2u^2, b=-3, d=-1, q=-1), constantin_lannes
// (A = u + 3u^2 - 2u^3 + 3u^4, b=28, d=14, p=1, q=-1).
inline FamilyInstance make_camassa_holm_preset(const std::string& preset,
                                               double kappa, double c,
                                               double k, Gc gc) {
    CamassaHolmCoeffs co;
    std::map<std::string, double> extra;
    if (preset == "camassa_holm") {
        co.A = polynomial_field({0.0, 2.0 * kappa, 1.5});
        co.b = -2.0;
        co.d = 1.0;
        co.q = -1.0;
        extra["kappa"] = kappa;
    } else if (preset == "degasperis_procesi") {
        co.A = polynomial_field({0.0, 0.0, 2.0});
        co.b = -3.0;
        co.d = -1.0;
        co.q = -1.0;
    } else if (preset == "constantin_lannes") {
        co.A = polynomial_field({0.0, 1.0, 3.0, -2.0, 3.0});
        co.b = 28.0;
        co.d = 14.0;
        co.p = 1.0;
        co.q = -1.0;
    } else {
        throw InvalidParams("camassa_holm_class: unknown preset '" + preset +
                            "'");
    }
    return make_camassa_holm_raw(co, c, k, std::move(gc),
                                 Family::CamassaHolmClass, std::move(extra));
}

// ---------------------------------------------------------------------------

struct FamilyMeta {
    std::string name;
    std::string params;
    std::string validity;
};

inline const std::vector<FamilyMeta>& family_catalog() {
    static const std::vector<FamilyMeta> meta = {
        {"toy", "a, b, d, c; perturbation g_odd coefficients",
         "a - b c + d c^2 > 0"},
        {"ostrovsky", "c", "c > 0; annulus in {x < c}"},
        {"klein_gordon", "lambda, p, c", "lambda > 0, p odd, c^2 > 1"},
        {"sine_gordon", "c", "c^2 > 1; ceiling exactly 2/(c^2-1)"},
        {"gen_kdv", "a, b, d, p, q, r, s, c, k",
         "dispersion C != 0; quadratic restoring with center+saddle"},
        {"rosenau_hyman", "a, c, k, n",
         "integer n >= 2; a center x > 0 must exist"},
        {"camassa_holm_class",
         "preset (camassa_holm | degasperis_procesi | constantin_lannes) "
         "with kappa, c, k; or raw polynomial A with b, d, p, q, r, s",
         "center of A(x) - c x = k inside {C + d x > 0}"},
        {"boussinesq", "a, b, d, e, p, q, r, s, f, c, k",
         "dispersion D != 0, e != 0, quadratic C x + e x^2 = k with two "
         "roots"},
    };
    return meta;
}

} // namespace ptwave
