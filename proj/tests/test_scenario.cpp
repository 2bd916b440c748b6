// Scenario JSON parsing, instance construction for every family, and the
// serialization helpers.

#include <catch2/catch_amalgamated.hpp>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "ptwave/io.hpp"
#include "ptwave/scenario.hpp"

using namespace ptwave;
using nlohmann::json;

namespace {

Scenario parse_str(const std::string& text) {
    return parse_scenario(json::parse(text));
}

template <class Fn>
std::string error_of(Fn fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("minimal scenario parses with defaults") {
    Scenario sc = parse_str(R"({"schema":"1","family":"toy"})");
    REQUIRE(sc.family == "toy");
    REQUIRE(sc.pert_kind == "none");
    REQUIRE(sc.grid.n == 0);
    REQUIRE(sc.grid.lo_frac == Catch::Approx(1e-4));
    REQUIRE(sc.grid.hi_frac == Catch::Approx(0.999));
    REQUIRE(sc.grid.cap == 0.0);
    REQUIRE(sc.targets.empty());
    REQUIRE(sc.epsilons.empty());
    REQUIRE(sc.exponents.empty());
}

TEST_CASE("full scenario fields land where expected") {
    Scenario sc = parse_str(R"({
        "schema": "1",
        "family": "sine_gordon",
        "params": {"c": 2.0},
        "perturbation": {"kind": "monomials",
                         "terms": [{"q": 2, "p": 1, "d": -0.5}]},
        "grid": {"n": 32, "lo_frac": 1e-3, "hi_frac": 0.9, "cap": 1.5},
        "targets": [0.2, 0.4],
        "epsilons": [1e-2, 1e-3],
        "exponents": [[0, 1], [2, 1], [0, 2]]
    })");
    REQUIRE(sc.pert_kind == "monomials");
    REQUIRE(sc.terms.size() == 1);
    REQUIRE(sc.terms[0].q == 2);
    REQUIRE(sc.terms[0].p == 1);
    REQUIRE(sc.terms[0].d == -0.5);
    REQUIRE(sc.grid.n == 32);
    REQUIRE(sc.grid.cap == 1.5);
    REQUIRE(sc.targets == std::vector<double>{0.2, 0.4});
    REQUIRE(sc.epsilons == std::vector<double>{1e-2, 1e-3});
    REQUIRE(sc.exponents.size() == 3);
    REQUIRE(sc.exponents[1].q == 2);
    REQUIRE(sc.exponents[1].p == 1);
}

TEST_CASE("parse errors carry the offending path") {
    REQUIRE_THROWS_AS(parse_str(R"([1,2])"), BadScenario);
    REQUIRE(error_of([] {
                parse_str(R"({"family":"toy"})");
            }).find("schema") != std::string::npos);
    REQUIRE(error_of([] {
                parse_str(R"({"schema":"2","family":"toy"})");
            }).find("schema") != std::string::npos);
    REQUIRE(error_of([] {
                parse_str(R"({"schema":"1"})");
            }).find("family") != std::string::npos);
    REQUIRE(error_of([] {
                parse_str(R"({"schema":"1","family":"toy",
                              "perturbation":{"kind":"fourier"}})");
            }).find("perturbation.kind") != std::string::npos);
    REQUIRE(error_of([] {
                parse_str(R"({"schema":"1","family":"toy",
                              "perturbation":{"kind":"monomials",
                                              "terms":[{"q":0,"p":0,"d":1}]}})");
            }).find("terms[0]") != std::string::npos);
    REQUIRE(error_of([] {
                parse_str(R"({"schema":"1","family":"toy",
                              "perturbation":{"kind":"family_gc",
                                              "expr_coeffs":[]}})");
            }).find("expr_coeffs") != std::string::npos);
    REQUIRE(error_of([] {
                parse_str(R"({"schema":"1","family":"toy",
                              "grid":{"lo_frac":0.5,"hi_frac":0.1}})");
            }).find("grid") != std::string::npos);
    REQUIRE(error_of([] {
                parse_str(R"({"schema":"1","family":"toy",
                              "exponents":[[0,1],[2]]})");
            }).find("exponents[1]") != std::string::npos);
    REQUIRE(error_of([] {
                parse_str(R"({"schema":"1","family":"toy",
                              "targets":[0.1,"x"]})");
            }).find("targets") != std::string::npos);
}

TEST_CASE("unknown family names the valid ones") {
    Scenario sc = parse_str(R"({"schema":"1","family":"kadomtsev"})");
    std::string msg = error_of([&] { build_instance(sc); });
    REQUIRE(msg.find("kadomtsev") != std::string::npos);
    REQUIRE(msg.find("ostrovsky") != std::string::npos);
    REQUIRE(msg.find("camassa_holm_class") != std::string::npos);
}

TEST_CASE("every family builds from a scenario") {
    struct Case {
        const char* text;
        Family family;
    };
    const Case cases[] = {
        {R"({"schema":"1","family":"toy",
             "params":{"a":1,"b":0,"d":0,"c":0},
             "perturbation":{"kind":"family_gc","expr_coeffs":[-1,1]}})",
         Family::Toy},
        {R"({"schema":"1","family":"ostrovsky","params":{"c":1},
             "perturbation":{"kind":"family_gc","expr_coeffs":[1]}})",
         Family::Ostrovsky},
        {R"({"schema":"1","family":"klein_gordon",
             "params":{"lambda":1,"p":3,"c":2}})",
         Family::KleinGordon},
        {R"({"schema":"1","family":"sine_gordon","params":{"c":2}})",
         Family::SineGordon},
        {R"({"schema":"1","family":"gen_kdv",
             "params":{"preset":"kdv","c":1}})",
         Family::GenKdV},
        {R"({"schema":"1","family":"rosenau_hyman",
             "params":{"a":1,"c":1,"n":2}})",
         Family::RosenauHyman},
        {R"({"schema":"1","family":"camassa_holm_class",
             "params":{"preset":"camassa_holm","kappa":1,"c":3}})",
         Family::CamassaHolmClass},
        {R"({"schema":"1","family":"boussinesq",
             "params":{"preset":"classical","c":2}})",
         Family::Boussinesq},
    };
    for (const Case& cs : cases) {
        FamilyInstance fi = build_instance(parse_str(cs.text));
        REQUIRE(fi.family == cs.family);
        REQUIRE(consistency_error_mid_oval(fi.model) < 1e-6);
    }
}

TEST_CASE("family_gc coefficients become the odd perturbation series") {
    FamilyInstance toy = build_instance(parse_str(
        R"({"schema":"1","family":"toy",
            "perturbation":{"kind":"family_gc","expr_coeffs":[-1,1]}})"));
    REQUIRE(toy.pert_integrand(0.0, 2.0) == Catch::Approx(6.0));

    FamilyInstance ost = build_instance(parse_str(
        R"({"schema":"1","family":"ostrovsky","params":{"c":1},
            "perturbation":{"kind":"family_gc","expr_coeffs":[1]}})"));
    // family coupling: (x - c)^2 * y
    REQUIRE(ost.pert_integrand(0.5, 2.0) == Catch::Approx(0.5));
}

TEST_CASE("monomial terms override the family coupling") {
    FamilyInstance fi = build_instance(parse_str(
        R"({"schema":"1","family":"ostrovsky","params":{"c":1},
            "perturbation":{"kind":"monomials",
                            "terms":[{"q":0,"p":2,"d":-1},
                                     {"q":1,"p":1,"d":0.5}]}})"));
    // q is half the x exponent: -y^3 + 0.5 x^2 y at (2, 1)
    REQUIRE(fi.pert_integrand(2.0, 1.0) == Catch::Approx(1.0));
}

TEST_CASE("camassa_holm raw polynomial coefficients") {
    FamilyInstance fi = build_instance(parse_str(
        R"({"schema":"1","family":"camassa_holm_class",
            "params":{"a_poly":[0,0,1],"b":1,"d":1,"p":1,"c":1}})"));
    REQUIRE(fi.params.at("beta") == 0.0);
    REQUIRE(fi.params.at("center") == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("scenario grid resolves against the model ceiling") {
    FamilyInstance sg = build_instance(
        parse_str(R"({"schema":"1","family":"sine_gordon","params":{"c":2}})"));
    GridSpec g;   // n = 0: command default applies
    std::vector<double> grid = scenario_h_grid(sg, g, 64);
    REQUIRE(grid.size() == 64);
    REQUIRE(grid.front() > 0.0);
    REQUIRE(grid.back() < sg.model.h_ceiling());

    FamilyInstance toy = build_instance(
        parse_str(R"({"schema":"1","family":"toy"})"));
    REQUIRE_THROWS_AS(scenario_h_grid(toy, g, 64), InvalidParams);
    g.cap = 2.0;
    REQUIRE(scenario_h_grid(toy, g, 32).size() == 32);
}

TEST_CASE("doubles print in shortest round-trip form") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e17, 1e-300, 0.0, 2.0 / 3.0}) {
        std::string s = fmt_double(v);
        double back = 0.0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(res.ec == std::errc());
        REQUIRE(back == v);
    }
    REQUIRE(fmt_double(0.1) == "0.1");
    REQUIRE(fmt_double(2.0) == "2");
}

TEST_CASE("curve CSV layout is exact") {
    MelnikovCurve c;
    c.samples = {MelnikovSample{0.25, -1.5, 1e-12},
                 MelnikovSample{0.5, 2.0, 2e-12}};
    std::ostringstream os;
    write_melnikov_csv(os, c);
    REQUIRE(os.str() ==
            "h,M,quad_error\n0.25,-1.5,1e-12\n0.5,2,2e-12\n");
    REQUIRE(os.str().find('\r') == std::string::npos);

    WaveProfile wp;
    wp.samples = {{0.0, 1.0}, {0.5, 0.25}};
    std::ostringstream ps;
    write_profile_csv(ps, wp);
    REQUIRE(ps.str() == "s,U\n0,1\n0.5,0.25\n");
}

TEST_CASE("json reports carry the schema tag and fields") {
    ZeroScan scan;
    ZeroRecord z;
    z.h_star = 0.5;
    z.simple = true;
    scan.zeros.push_back(z);
    scan.warnings.push_back("note");
    auto j = zeros_to_json(scan);
    REQUIRE(j["schema"] == "1");
    REQUIRE(j["zeros"].size() == 1);
    REQUIRE(j["zeros"][0]["h"] == 0.5);
    REQUIRE(j["zeros"][0]["simple"] == true);
    REQUIRE(j["warnings"][0] == "note");

    LimitCycleReport rep;
    rep.epsilon = 1e-3;
    FixedPointRec fp;
    fp.x_section = 1.1;
    fp.h_equiv = 0.6;
    fp.attracting = true;
    fp.period_tau = std::numeric_limits<double>::quiet_NaN();
    rep.fixed_points.push_back(fp);
    auto rj = report_to_json(rep);
    REQUIRE(rj["epsilon"] == 1e-3);
    REQUIRE(rj["fixed_points"][0]["stability"] == "attracting");
    // NaN period is omitted rather than serialized
    REQUIRE(!rj["fixed_points"][0].contains("period_tau"));

    WaveProfile wp;
    wp.h = 0.5;
    wp.period_tau = 6.28;
    auto pj = profile_to_json(wp);
    REQUIRE(pj["h"] == 0.5);
    // speed is unknown on a bare model: the key is absent
    REQUIRE(!pj.contains("c"));
}
