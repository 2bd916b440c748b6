// Direct integration: the embedded Runge-Kutta stepper, Poincare return
// maps, limit-cycle detection against Melnikov predictions, and wave-profile
// reconstruction.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "ptwave/abelian.hpp"
#include "ptwave/dynamics.hpp"
#include "ptwave/families.hpp"

using namespace ptwave;

namespace {

constexpr double kPi = 3.14159265358979323846;

PlanarModel harmonic() {
    SeparableParts parts;
    parts.A = constant_field(0.5);
    parts.B = polynomial_field({0.0, 0.0, 0.5});
    return make_separable_model(std::move(parts), 0.0, whole_plane());
}

} // namespace

TEST_CASE("stepper holds energy over many revolutions") {
    ode::Dopri5<2> solver([](double, const std::array<double, 2>& y,
                             std::array<double, 2>& dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
    });
    solver.init(0.0, {1.0, 0.0});
    ode::DenseStep<2> st;
    bool dense_checked = false;
    while (solver.t() < 20.0 * kPi) {
        solver.step(st);
        // dense output inside the step that covers t = pi/3
        if (!dense_checked && st.t0 <= kPi / 3.0 && st.t1() >= kPi / 3.0) {
            REQUIRE(st.eval(0, kPi / 3.0) ==
                    Catch::Approx(0.5).margin(1e-9));
            dense_checked = true;
        }
    }
    REQUIRE(dense_checked);
    double e = solver.y()[0] * solver.y()[0] + solver.y()[1] * solver.y()[1];
    REQUIRE(e == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("dense output is accurate within a single step") {
    ode::Dopri5<1> solver(
        [](double, const std::array<double, 1>& y,
           std::array<double, 1>& dy) { dy[0] = y[0]; });
    solver.init(0.0, {1.0});
    ode::DenseStep<1> st;
    solver.step(st);
    double tm = st.t0 + 0.37 * st.h;
    REQUIRE(st.eval(0, tm) ==
            Catch::Approx(std::exp(tm)).epsilon(1e-10));
}

TEST_CASE("orbit period in rescaled time") {
    PlanarModel m = harmonic();
    for (double h : {0.1, 0.5, 5.0})
        REQUIRE(oval_period(m, h) == Catch::Approx(2.0 * kPi).epsilon(1e-9));
    // toy with C = 2 is harmonic with frequency 1/C
    FamilyInstance toy = make_toy(4.0, 0.0, 0.0, 0.0, {1.0});
    REQUIRE(oval_period(toy.model, 0.7) ==
            Catch::Approx(4.0 * kPi).epsilon(1e-9));
    // small oscillations: omega^2 = B''(center)/(2 A(center)) = 1 here
    FamilyInstance ost = make_ostrovsky(1.0, zero_gc());
    REQUIRE(oval_period(ost.model, 1e-8) ==
            Catch::Approx(2.0 * kPi).epsilon(1e-3));
}

TEST_CASE("unperturbed return map is the identity on the section") {
    FamilyInstance toy = make_toy(1.0, 0.0, 0.0, 0.0, {-1.0, 1.0});
    double tau = 0.0;
    double x0 = 1.2;
    double x1 = return_map(toy.model, toy.pert_integrand, 0.0, x0, &tau);
    REQUIRE(x1 == Catch::Approx(x0).margin(1e-9));
    REQUIRE(tau == Catch::Approx(2.0 * kPi).margin(1e-6));
}

TEST_CASE("return map guards") {
    FamilyInstance toy = make_toy(1.0, 0.0, 0.0, 0.0, {-1.0, 1.0});
    REQUIRE_THROWS_AS(
        return_map(toy.model, toy.pert_integrand, 0.1, 1.0),
        InvalidParams);
    REQUIRE_THROWS_AS(
        return_map(toy.model, toy.pert_integrand, 1e-3, -0.5),
        InvalidParams);
    FamilyInstance sg = make_sine_gordon(std::sqrt(2.0), zero_gc());
    REQUIRE_THROWS_AS(return_map(sg.model, sg.pert_integrand, 0.0, 3.5),
                      EscapedAnnulus);
}

TEST_CASE("energy pumped past the separatrix never returns") {
    // near-ceiling start; g_c = y feeds energy in at eps > 0, the orbit
    // crosses into rotation and the section is never hit again
    FamilyInstance sg =
        make_sine_gordon(std::sqrt(2.0), [](double, double y) { return y; });
    double h = 0.9975 * sg.model.h_ceiling();
    double x0 = turning_points(sg.model, h).x_plus;
    REQUIRE_THROWS_AS(return_map(sg.model, sg.pert_integrand, 1e-2, x0),
                      EscapedAnnulus);
}

TEST_CASE("one-loop energy balance matches the Melnikov density") {
    // over one return, Delta H = -eps M(h) + O(eps^2) and the section
    // displacement is Delta H / H_x(x0, 0); the empirical ratio must be 1
    FamilyInstance toy = make_toy(1.0, 0.0, 0.0, 0.0, {-1.0, 1.0});
    const double eps = 1e-3;
    for (double h : {0.3, 0.5, 1.0}) {
        double M = melnikov_point(toy.model, toy.pert_integrand, h).M;
        double x0 = turning_points(toy.model, h).x_plus;
        double hx = x0;   // H_x = x on this model
        double dx = return_map(toy.model, toy.pert_integrand, eps, x0) - x0;
        REQUIRE(dx * (-eps * M) > 0.0);   // sign agreement
        double kappa = dx / (-eps * M / hx);
        REQUIRE(kappa == Catch::Approx(1.0).margin(0.05));
    }
}

TEST_CASE("limit cycle detection lands on the Melnikov zero") {
    FamilyInstance toy = make_toy(1.0, 0.0, 0.0, 0.0, {-1.0, 1.0});
    // eps < 0 makes the cycle at h = 2/3 attracting: inner orbits drift out
    LimitCycleReport rep =
        detect_limit_cycles(toy, -1e-3, 33, 1.5, {2.0 / 3.0});
    REQUIRE(!rep.degenerate_continuum);
    REQUIRE(rep.fixed_points.size() == 1);
    const FixedPointRec& fp = rep.fixed_points[0];
    REQUIRE(fp.attracting);
    REQUIRE(fp.h_equiv == Catch::Approx(2.0 / 3.0).epsilon(1e-2));
    REQUIRE(fp.period_tau == Catch::Approx(2.0 * kPi).epsilon(1e-3));
    REQUIRE(rep.matched_zeros.size() == 1);
    REQUIRE(rep.matched_zeros[0].zero_h == Catch::Approx(2.0 / 3.0));
    REQUIRE(rep.matched_zeros[0].relative_gap < 5e-2);
}

TEST_CASE("zero perturbation is reported as a continuum, not cycles") {
    FamilyInstance toy = make_toy(1.0, 0.0, 0.0, 0.0, {-1.0, 1.0});
    LimitCycleReport rep = detect_limit_cycles(toy, 0.0, 17, 1.5);
    REQUIRE(rep.degenerate_continuum);
    REQUIRE(rep.fixed_points.empty());
    REQUIRE_THROWS_AS(detect_limit_cycles(toy, 0.1, 17, 1.5), InvalidParams);
}

TEST_CASE("harmonic wave profile is a cosine") {
    FamilyInstance kg = make_klein_gordon(1.0, 1, std::sqrt(2.0), zero_gc());
    WaveProfile wp = wave_profile(kg, 0.5, 257);
    REQUIRE(wp.h == 0.5);
    REQUIRE(wp.c == Catch::Approx(std::sqrt(2.0)));
    REQUIRE(wp.period_s == Catch::Approx(2.0 * kPi).margin(1e-9));
    REQUIRE(wp.period_tau == Catch::Approx(2.0 * kPi).margin(1e-9));
    REQUIRE(wp.samples.size() == 257);
    REQUIRE(wp.samples.front().s == 0.0);
    REQUIRE(wp.samples.back().s == Catch::Approx(wp.period_s));
    double worst = 0.0;
    for (const WaveSample& smp : wp.samples)
        worst = std::max(worst, std::abs(smp.u - std::cos(smp.s)));
    REQUIRE(worst < 1e-8);
    REQUIRE(wp.u_max == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(wp.u_min == Catch::Approx(-1.0).margin(1e-10));
    REQUIRE(wp.warnings.empty());
}

TEST_CASE("profile extrema coincide with the turning points") {
    FamilyInstance ost = make_ostrovsky(1.0, zero_gc());
    double h = 0.5 * ost.model.h_ceiling();
    WaveProfile wp = wave_profile(ost, h, 129);
    TurningPoints tp = turning_points(ost.model, h);
    REQUIRE(wp.u_min == Catch::Approx(tp.x_minus).margin(1e-8));
    REQUIRE(wp.u_max == Catch::Approx(tp.x_plus).margin(1e-8));
    REQUIRE(wp.warnings.empty());
}

TEST_CASE("a too-short time cap truncates the profile with a warning") {
    PlanarModel m = harmonic();
    WaveProfile wp = wave_profile(m, 0.5, 64, 1.0);
    REQUIRE(wp.samples.size() == 64);
    bool flagged = false;
    for (const std::string& w : wp.warnings)
        if (w.find("PeriodOverflow") != std::string::npos) flagged = true;
    REQUIRE(flagged);
    REQUIRE(wp.period_s < 2.0 * kPi);
}

TEST_CASE("wave profile guards") {
    PlanarModel m = harmonic();
    REQUIRE_THROWS_AS(wave_profile(m, -1.0, 64), EnergyOutOfRange);
    REQUIRE_THROWS_AS(wave_profile(m, 0.5, 1), InvalidParams);
    FamilyInstance sg = make_sine_gordon(std::sqrt(2.0), zero_gc());
    REQUIRE_THROWS_AS(
        wave_profile(sg.model, sg.model.h_ceiling() * 1.1, 64),
        EnergyOutOfRange);
}
