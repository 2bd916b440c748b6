// Coefficient design: placing Melnikov zeros at prescribed energies and the
// guards around the collocation solve.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <vector>

#include "ptwave/designer.hpp"
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

TEST_CASE("basis curves are positive and match closed forms") {
    PlanarModel m = harmonic();
    std::vector<BasisExponent> exps = {{0, 1}, {1, 1}};
    std::vector<double> grid = {0.2, 0.8};
    BasisCurves bc = basis_curves(m, exps, grid);
    REQUIRE(bc.J.size() == 2);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double h = grid[i];
        REQUIRE(bc.J[0][i] == Catch::Approx(2.0 * kPi * h).epsilon(1e-9));
        REQUIRE(bc.J[1][i] == Catch::Approx(kPi * h * h).epsilon(1e-9));
        REQUIRE(bc.J[0][i] > 0.0);
        REQUIRE(bc.J[1][i] > 0.0);
    }
}

TEST_CASE("duplicate total weights are rejected") {
    PlanarModel m = harmonic();
    std::vector<BasisExponent> dup = {{0, 2}, {1, 1}};   // both weight 2
    REQUIRE_THROWS_AS(basis_curves(m, dup, {0.5}), DuplicateWeight);
    REQUIRE_THROWS_AS(place_zeros(m, dup, {0.5}), DuplicateWeight);
}

TEST_CASE("null vector of a known 2x3 system") {
    double cond = 0.0;
    std::vector<std::vector<double>> G = {{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}};
    std::vector<double> v = detail::null_vector(G, cond);
    REQUIRE(v.size() == 3);
    double n2 = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    REQUIRE(n2 > 0.0);
    REQUIRE(std::abs(v[0] + 2.0 * v[1] + 3.0 * v[2]) < 1e-12 * n2);
    REQUIRE(std::abs(4.0 * v[0] + 5.0 * v[1] + 6.0 * v[2]) < 1e-12 * n2);
    REQUIRE(cond > 0.0);
}

TEST_CASE("three zeros placed on the harmonic annulus") {
    PlanarModel m = harmonic();
    std::vector<BasisExponent> exps = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    std::vector<double> targets = {0.4, 1.0, 1.8};
    Design d = place_zeros(m, exps, targets);

    REQUIRE(d.coefficients.size() == 4);
    double maxabs = 0.0;
    for (double c : d.coefficients) maxabs = std::max(maxabs, std::abs(c));
    REQUIRE(maxabs == Catch::Approx(1.0).epsilon(1e-12));

    // closed form: 2 d1 + 3 d2 h + 5 d3 h^2 + (35/4) d4 h^3 must be
    // proportional to (h-0.4)(h-1)(h-1.8) = h^3 - 3.2 h^2 + 2.92 h - 0.72;
    // normalized so d2 = 1
    REQUIRE(d.coefficients[1] == Catch::Approx(1.0).epsilon(1e-9));
    REQUIRE(d.coefficients[0] == Catch::Approx(-27.0 / 73.0).epsilon(1e-6));
    REQUIRE(d.coefficients[2] == Catch::Approx(-48.0 / 73.0).epsilon(1e-6));
    REQUIRE(d.coefficients[3] == Catch::Approx(60.0 / 511.0).epsilon(1e-6));

    REQUIRE(d.verified.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(d.residuals[i] <= 1e-6);
        REQUIRE(d.verified[i].simple);
        REQUIRE(d.verified[i].h_star ==
                Catch::Approx(targets[i]).epsilon(1e-5));
    }
    REQUIRE(d.condition_estimate < 1e6);

    // independent recount on a doubled grid: still exactly three zeros
    std::vector<double> grid = default_h_grid(m, 514, 4.0);
    MelnikovCurve curve = melnikov_curve(m, d.perturbation, grid);
    ZeroScan scan = find_zeros(m, d.perturbation, curve);
    REQUIRE(scan.zeros.size() == 3);
}

TEST_CASE("two zeros placed on a toy annulus with C = 2") {
    FamilyInstance toy = make_toy(4.0, 0.0, 0.0, 0.0, {1.0});
    std::vector<BasisExponent> exps = {{0, 1}, {0, 2}, {0, 3}};
    std::vector<double> targets = {0.3, 0.9};
    Design d = place_zeros(toy.model, exps, targets);
    // closed form: 4 d1 + 6 d2 h + 10 d3 h^2 prop. to (h-0.3)(h-0.9);
    // normalized by the largest coefficient, d2
    REQUIRE(d.coefficients[1] == Catch::Approx(1.0).epsilon(1e-9));
    REQUIRE(d.coefficients[0] == Catch::Approx(-0.3375).epsilon(1e-6));
    REQUIRE(d.coefficients[2] == Catch::Approx(-0.5).epsilon(1e-6));
    REQUIRE(d.residuals[0] <= 1e-6);
    REQUIRE(d.residuals[1] <= 1e-6);
}

TEST_CASE("input guards on targets and exponent counts") {
    PlanarModel m = harmonic();
    std::vector<BasisExponent> e2 = {{0, 1}, {0, 2}};
    std::vector<BasisExponent> e3 = {{0, 1}, {0, 2}, {0, 3}};
    REQUIRE_THROWS_AS(place_zeros(m, e3, {0.5}), InvalidParams);
    REQUIRE_THROWS_AS(place_zeros(m, e2, {}), InvalidParams);
    REQUIRE_THROWS_AS(place_zeros(m, e3, {0.9, 0.5}), InvalidParams);
    REQUIRE_THROWS_AS(place_zeros(m, e2, {-0.5}), EnergyOutOfRange);

    FamilyInstance sg = make_sine_gordon(std::sqrt(2.0), zero_gc());
    // ceiling is 2; targets within 1% of either end are refused
    REQUIRE_THROWS_AS(place_zeros(sg.model, e2, {0.01}), InvalidParams);
    REQUIRE_THROWS_AS(place_zeros(sg.model, e2, {1.99}), InvalidParams);
    REQUIRE_THROWS_AS(place_zeros(sg.model, e2, {2.5}), EnergyOutOfRange);
}

TEST_CASE("nearly coincident targets are reported as ill conditioned") {
    PlanarModel m = harmonic();
    std::vector<BasisExponent> e3 = {{0, 1}, {0, 2}, {0, 3}};
    REQUIRE_THROWS_AS(place_zeros(m, e3, {0.5, 0.5 * (1.0 + 1e-13)}),
                      IllConditioned);
}
