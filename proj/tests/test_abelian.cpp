// Closed-form oval integrals, parity, small-energy asymptotics, and the
// Melnikov curve against an independent series reference on the toy family.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "ptwave/abelian.hpp"
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

// independent composite-Simpson oracle on [a, b]
template <class F>
double simpson(F f, double a, double b, int panels) {
    double acc = f(a) + f(b);
    double dx = (b - a) / panels;
    for (int i = 1; i < panels; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * f(a + i * dx);
    return acc * dx / 3.0;
}

} // namespace

TEST_CASE("trig moment closed form matches direct quadrature") {
    // K(p, n) equals the half-angle moment of sin/cos powers
    for (int p = 1; p <= 5; ++p) {
        for (int n = 0; n <= 5; ++n) {
            double oracle = simpson(
                [&](double th) {
                    return std::pow(0.5 * std::sin(th), 2 * p) *
                           std::pow(0.5 * std::cos(th), 2 * n);
                },
                0.0, kPi, 20000);
            REQUIRE(K_closed_form(p, n) ==
                    Catch::Approx(oracle).margin(1e-12));
        }
    }
    REQUIRE(K_closed_form(1, 0) == Catch::Approx(kPi / 8.0));
    REQUIRE(K_closed_form(1, 1) == Catch::Approx(kPi / 128.0));
    REQUIRE(K_closed_form(2, 0) == Catch::Approx(3.0 * kPi / 128.0));
}

TEST_CASE("trig moment factorial guard") {
    REQUIRE_THROWS_AS(K_closed_form(15, 6), Overflow);
    REQUIRE_NOTHROW(K_closed_form(15, 5));
}

TEST_CASE("harmonic oval integrals have known values") {
    PlanarModel m = harmonic();
    ScalarField1D one = constant_field(1.0);
    ScalarField1D xsq = polynomial_field({0.0, 0.0, 1.0});
    for (double h : {0.1, 1.0, 10.0}) {
        REQUIRE(abelian_J(m, one, 1, h) ==
                Catch::Approx(2.0 * kPi * h).epsilon(1e-9));
        REQUIRE(abelian_J(m, xsq, 1, h) ==
                Catch::Approx(kPi * h * h).epsilon(1e-9));
    }
}

TEST_CASE("even vertical powers vanish identically") {
    PlanarModel m = harmonic();
    ScalarField1D one = constant_field(1.0);
    REQUIRE(abelian_J(m, one, 2, 0.7) == 0.0);
    REQUIRE(abelian_J(m, one, 4, 0.7) == 0.0);
    REQUIRE_THROWS_AS(abelian_J(m, one, 0, 0.7), InvalidParams);
}

TEST_CASE("odd horizontal weights integrate to zero on symmetric ovals") {
    ScalarField1D x1 = polynomial_field({0.0, 1.0});
    ScalarField1D x3 = polynomial_field({0.0, 0.0, 0.0, 1.0});
    PlanarModel m = harmonic();
    REQUIRE(std::abs(abelian_J(m, x1, 1, 0.8)) < 1e-10);
    REQUIRE(std::abs(abelian_J(m, x3, 3, 0.8)) < 1e-10);

    FamilyInstance sg = make_sine_gordon(std::sqrt(2.0), zero_gc());
    REQUIRE(std::abs(abelian_J(sg.model, x1, 1, 0.5 * sg.model.h_ceiling())) <
            1e-10);

    FamilyInstance kg = make_klein_gordon(1.0, 3, std::sqrt(2.0), zero_gc());
    REQUIRE(std::abs(abelian_J(kg.model, x3, 1, 0.5)) < 1e-10);
}

TEST_CASE("small-energy leading term on the harmonic annulus") {
    PlanarModel m = harmonic();
    JLeading l10 = J_asymptotic_leading(m, 1.0, 0, 1);
    REQUIRE(l10.exponent == 1);
    REQUIRE(l10.coefficient == Catch::Approx(2.0 * kPi).epsilon(1e-12));
    JLeading l11 = J_asymptotic_leading(m, 1.0, 1, 1);
    REQUIRE(l11.exponent == 2);
    REQUIRE(l11.coefficient == Catch::Approx(kPi).epsilon(1e-12));
    JLeading l20 = J_asymptotic_leading(m, 1.0, 0, 3);
    REQUIRE(l20.exponent == 2);
    REQUIRE(l20.coefficient == Catch::Approx(3.0 * kPi).epsilon(1e-12));
}

TEST_CASE("toy oval moments follow the even-power table") {
    REQUIRE(toy_I2n(1) == Catch::Approx(kPi));
    REQUIRE(toy_I2n(2) == Catch::Approx(3.0 * kPi / 4.0));
    REQUIRE(toy_I2n(3) == Catch::Approx(5.0 * kPi / 8.0));
    // J with unit weight and y^(2p-1) equals 2^p C I_{2p} h^p; check C = 2
    FamilyInstance toy = make_toy(4.0, 0.0, 0.0, 0.0, {1.0});
    ScalarField1D one = constant_field(1.0);
    double h = 0.6;
    REQUIRE(abelian_J(toy.model, one, 1, h) ==
            Catch::Approx(2.0 * 2.0 * kPi * h).epsilon(1e-9));
    REQUIRE(abelian_J(toy.model, one, 3, h) ==
            Catch::Approx(4.0 * 2.0 * (3.0 * kPi / 4.0) * h * h)
                .epsilon(1e-9));
}

TEST_CASE("toy Melnikov curve matches the series reference") {
    FamilyInstance toy = make_toy(1.0, 0.0, 0.0, 0.0, {-1.0, 1.0});
    std::vector<double> grid = default_h_grid(toy.model, 16, 1.5);
    MelnikovCurve curve =
        melnikov_curve(toy.model, toy.pert_integrand, grid, 1e-10);
    REQUIRE(curve.samples.size() == grid.size());
    for (const MelnikovSample& s : curve.samples) {
        double ref = toy_reference_melnikov(1.0, {-1.0, 1.0}, s.h);
        REQUIRE(s.M == Catch::Approx(ref).margin(1e-8));
        REQUIRE(s.quad_error <= 1e-9);
    }
    // sign structure: M > 0 below 2/3, M < 0 above (M(h) = 2*pi*h - 3*pi*h^2)
    REQUIRE(melnikov_point(toy.model, toy.pert_integrand, 0.25).M > 0.0);
    REQUIRE(melnikov_point(toy.model, toy.pert_integrand, 1.0).M < 0.0);
}

TEST_CASE("energy grid construction guards its inputs") {
    PlanarModel m = harmonic();   // infinite ceiling
    REQUIRE_THROWS_AS(default_h_grid(m, 16), InvalidParams);
    REQUIRE_THROWS_AS(default_h_grid(m, 1, 1.0), InvalidParams);
    std::vector<double> g = default_h_grid(m, 16, 2.0);
    REQUIRE(g.size() == 16);
    REQUIRE(g.front() > 0.0);
    REQUIRE(g.back() < 2.0);
    for (std::size_t i = 1; i < g.size(); ++i) REQUIRE(g[i] > g[i - 1]);

    FamilyInstance ost = make_ostrovsky(1.0, zero_gc());
    std::vector<double> go = default_h_grid(ost.model, 8);
    REQUIRE(go.back() < ost.model.h_ceiling());
}

TEST_CASE("melnikov curve rejects bad grids") {
    FamilyInstance ost = make_ostrovsky(1.0, zero_gc());
    MonomialPerturbation pert{{MonomialTerm{0, 1, 1.0}}};
    std::vector<double> above = {0.01, ost.model.h_ceiling() * 1.5};
    REQUIRE_THROWS_AS(melnikov_curve(ost.model, pert, above),
                      EnergyOutOfRange);
    std::vector<double> unsorted = {0.05, 0.02};
    REQUIRE_THROWS_AS(melnikov_curve(ost.model, pert, unsorted),
                      InvalidParams);
}

TEST_CASE("monomial perturbations evaluate as written") {
    // q is half the x exponent: {1,1,2} is 2*x^2*y, {0,2,-1} is -y^3.
    MonomialPerturbation pert{
        {MonomialTerm{1, 1, 2.0}, MonomialTerm{0, 2, -1.0}}};
    // at (2, 3): 2*4*3 - 27
    REQUIRE(pert(2.0, 3.0) == Catch::Approx(-3.0));
    REQUIRE(pert(2.0, -3.0) == Catch::Approx(3.0));
}
