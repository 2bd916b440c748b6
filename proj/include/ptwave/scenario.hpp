#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelian.hpp"
#include "designer.hpp"
#include "errors.hpp"
#include "families.hpp"

namespace ptwave {

// One JSON document drives every subcommand. Versioned "schema":"1".
//   { "schema":"1", "family":..., "params":{...},
//     "perturbation":{"kind":"monomials"|"family_gc", "terms":[...] |
//                     "expr_coeffs":[...]},
//     "grid":{"n":..,"lo_frac":..,"hi_frac":..,"cap":..},
//     "targets":[...], "epsilons":[...], "exponents":[[q,p],...] }
struct GridSpec {
    int n = 0;   // 0 = command default (64 for curves, 128 for seeds)
    double lo_frac = 1e-4;
    double hi_frac = 0.999;
    double cap = 0.0;   // energy cap, required when h_ceiling = inf
};

struct Scenario {
    std::string family;
    nlohmann::json params;   // family-specific parameter object
    std::string pert_kind = "none";   // "monomials" | "family_gc" | "none"
    std::vector<MonomialTerm> terms;
    std::vector<double> expr_coeffs;
    GridSpec grid;
    std::vector<double> targets;
    std::vector<double> epsilons;
    std::vector<BasisExponent> exponents;
};

namespace scen {

inline const nlohmann::json& need(const nlohmann::json& j, const char* key,
                                  const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw BadScenario(where + ": missing required field '" + key + "'");
    return *it;
}

inline double num(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number())
        throw BadScenario(where + ": expected a number");
    return v.get<double>();
}

inline double num_field(const nlohmann::json& j, const char* key,
                        const std::string& where) {
    return num(need(j, key, where), where + "." + key);
}

inline double num_or(const nlohmann::json& j, const char* key, double dflt,
                     const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) return dflt;
    return num(*it, where + "." + key);
}

inline std::vector<double> num_list(const nlohmann::json& v,
                                    const std::string& where) {
    if (!v.is_array())
        throw BadScenario(where + ": expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(num(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace scen

inline Scenario parse_scenario(const nlohmann::json& j) {
    if (!j.is_object()) throw BadScenario("scenario root must be an object");
    {
        const auto& v = scen::need(j, "schema", "scenario");
        if (!v.is_string() || v.get<std::string>() != "1")
            throw BadScenario("scenario.schema: expected the string \"1\"");
    }
    Scenario sc;
    {
        const auto& v = scen::need(j, "family", "scenario");
        if (!v.is_string())
            throw BadScenario("scenario.family: expected a string");
        sc.family = v.get<std::string>();
    }
    sc.params = j.value("params", nlohmann::json::object());
    if (!sc.params.is_object())
        throw BadScenario("scenario.params: expected an object");

    if (j.contains("perturbation")) {
        const auto& p = j["perturbation"];
        if (!p.is_object())
            throw BadScenario("scenario.perturbation: expected an object");
        const auto& kindv = scen::need(p, "kind", "scenario.perturbation");
        if (!kindv.is_string())
            throw BadScenario("scenario.perturbation.kind: expected a string");
        sc.pert_kind = kindv.get<std::string>();
        if (sc.pert_kind == "monomials") {
            const auto& t = scen::need(p, "terms", "scenario.perturbation");
            if (!t.is_array() || t.empty())
                throw BadScenario("scenario.perturbation.terms: expected a "
                                  "non-empty array");
            for (std::size_t i = 0; i < t.size(); ++i) {
                std::string where =
                    "scenario.perturbation.terms[" + std::to_string(i) + "]";
                const auto& ti = t[i];
                if (!ti.is_object()) throw BadScenario(where + ": expected "
                                                               "an object");
                MonomialTerm mt;
                double q = scen::num_field(ti, "q", where);
                double pp = scen::num_field(ti, "p", where);
                mt.q = static_cast<int>(q);
                mt.p = static_cast<int>(pp);
                if (mt.q != q || mt.p != pp || mt.q < 0 || mt.p < 1)
                    throw BadScenario(where + ": q must be an integer >= 0 "
                                              "and p an integer >= 1");
                mt.d = scen::num_field(ti, "d", where);
                sc.terms.push_back(mt);
            }
        } else if (sc.pert_kind == "family_gc") {
            const auto& cc =
                scen::need(p, "expr_coeffs", "scenario.perturbation");
            sc.expr_coeffs =
                scen::num_list(cc, "scenario.perturbation.expr_coeffs");
            if (sc.expr_coeffs.empty())
                throw BadScenario("scenario.perturbation.expr_coeffs: "
                                  "expected a non-empty array");
        } else {
            throw BadScenario("scenario.perturbation.kind: must be "
                              "\"monomials\" or \"family_gc\", got \"" +
                              sc.pert_kind + "\"");
        }
    }

    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (!g.is_object())
            throw BadScenario("scenario.grid: expected an object");
        double n = scen::num_or(g, "n", 0.0, "scenario.grid");
        sc.grid.n = static_cast<int>(n);
        if (sc.grid.n != n || sc.grid.n < 0)
            throw BadScenario("scenario.grid.n: expected a non-negative "
                              "integer");
        sc.grid.lo_frac = scen::num_or(g, "lo_frac", 1e-4, "scenario.grid");
        sc.grid.hi_frac = scen::num_or(g, "hi_frac", 0.999, "scenario.grid");
        sc.grid.cap = scen::num_or(g, "cap", 0.0, "scenario.grid");
        if (!(sc.grid.lo_frac > 0.0) || !(sc.grid.hi_frac < 1.0) ||
            !(sc.grid.lo_frac < sc.grid.hi_frac))
            throw BadScenario("scenario.grid: need 0 < lo_frac < hi_frac "
                              "< 1");
    }

    if (j.contains("targets"))
        sc.targets = scen::num_list(j["targets"], "scenario.targets");
    if (j.contains("epsilons"))
        sc.epsilons = scen::num_list(j["epsilons"], "scenario.epsilons");

    if (j.contains("exponents")) {
        const auto& e = j["exponents"];
        if (!e.is_array())
            throw BadScenario("scenario.exponents: expected an array of "
                              "[q, p] pairs");
        for (std::size_t i = 0; i < e.size(); ++i) {
            std::string where =
                "scenario.exponents[" + std::to_string(i) + "]";
            const auto& ei = e[i];
            if (!ei.is_array() || ei.size() != 2)
                throw BadScenario(where + ": expected a [q, p] pair");
            double q = scen::num(ei[0], where + "[0]");
            double p = scen::num(ei[1], where + "[1]");
            BasisExponent be;
            be.q = static_cast<int>(q);
            be.p = static_cast<int>(p);
            if (be.q != q || be.p != p || be.q < 0 || be.p < 1)
                throw BadScenario(where + ": q must be an integer >= 0 and "
                                          "p an integer >= 1");
            sc.exponents.push_back(be);
        }
    }
    return sc;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadScenario("cannot open scenario file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw BadScenario("scenario JSON parse error in " + path + ": " +
                          e.what());
    }
    return parse_scenario(j);
}

// Builds the family instance a scenario describes. The perturbation slot is
// filled from `perturbation`: family_gc coefficients c_j define
// g_c(x,y) = sum_j c_j y^(2j+1); monomial terms override the integrand
// directly (the form the designer emits).
inline FamilyInstance build_instance(const Scenario& sc) {
    const auto& p = sc.params;
    const std::string where = "scenario.params";

    Gc gc = zero_gc();
    if (sc.pert_kind == "family_gc") {
        std::vector<double> cs = sc.expr_coeffs;
        gc = [cs](double, double y) {
            double acc = 0.0, yp = y;
            for (double ci : cs) {
                acc += ci * yp;
                yp *= y * y;
            }
            return acc;
        };
    }

    FamilyInstance fi = [&]() -> FamilyInstance {
        if (sc.family == "toy") {
            std::vector<double> g_odd =
                (sc.pert_kind == "family_gc") ? sc.expr_coeffs
                                              : std::vector<double>{};
            return make_toy(scen::num_or(p, "a", 1.0, where),
                            scen::num_or(p, "b", 0.0, where),
                            scen::num_or(p, "d", 0.0, where),
                            scen::num_or(p, "c", 0.0, where), g_odd);
        }
        if (sc.family == "ostrovsky")
            return make_ostrovsky(scen::num_field(p, "c", where), gc);
        if (sc.family == "klein_gordon") {
            double pe = scen::num_or(p, "p", 1.0, where);
            int pi = static_cast<int>(pe);
            if (pi != pe)
                throw BadScenario(where + ".p: expected an integer");
            return make_klein_gordon(scen::num_or(p, "lambda", 1.0, where),
                                     pi, scen::num_field(p, "c", where), gc);
        }
        if (sc.family == "sine_gordon")
            return make_sine_gordon(scen::num_field(p, "c", where), gc);
        if (sc.family == "gen_kdv") {
            if (p.value("preset", std::string()) == "kdv")
                return make_kdv(scen::num_field(p, "c", where),
                                scen::num_or(p, "k", 0.0, where), gc);
            return make_gen_kdv(scen::num_or(p, "a", 0.0, where),
                                scen::num_or(p, "b", 0.0, where),
                                scen::num_or(p, "d", 0.0, where),
                                scen::num_or(p, "p", 0.0, where),
                                scen::num_or(p, "q", 0.0, where),
                                scen::num_or(p, "r", 0.0, where),
                                scen::num_or(p, "s", 0.0, where),
                                scen::num_field(p, "c", where),
                                scen::num_or(p, "k", 0.0, where), gc);
        }
        if (sc.family == "rosenau_hyman") {
            double ne = scen::num_field(p, "n", where);
            int ni = static_cast<int>(ne);
            if (ni != ne)
                throw BadScenario(where + ".n: expected an integer");
            return make_rosenau_hyman(scen::num_or(p, "a", 1.0, where),
                                      scen::num_field(p, "c", where),
                                      scen::num_or(p, "k", 0.0, where), ni,
                                      gc);
        }
        if (sc.family == "camassa_holm_class") {
            if (p.contains("preset")) {
                const auto& pr = p["preset"];
                if (!pr.is_string())
                    throw BadScenario(where + ".preset: expected a string");
                return make_camassa_holm_preset(
                    pr.get<std::string>(),
                    scen::num_or(p, "kappa", 0.0, where),
                    scen::num_field(p, "c", where),
                    scen::num_or(p, "k", 0.0, where), gc);
            }
            const auto& ap = scen::need(p, "a_poly", where);
            CamassaHolmCoeffs co;
            co.A = polynomial_field(
                scen::num_list(ap, where + ".a_poly"));
            co.b = scen::num_or(p, "b", 0.0, where);
            co.d = scen::num_or(p, "d", 0.0, where);
            co.p = scen::num_or(p, "p", 0.0, where);
            co.q = scen::num_or(p, "q", 0.0, where);
            co.r = scen::num_or(p, "r", 0.0, where);
            co.s = scen::num_or(p, "s", 0.0, where);
            return make_camassa_holm_raw(co, scen::num_field(p, "c", where),
                                         scen::num_or(p, "k", 0.0, where),
                                         gc);
        }
        if (sc.family == "boussinesq") {
            if (p.value("preset", std::string()) == "classical")
                return make_boussinesq_classical(
                    scen::num_field(p, "c", where),
                    scen::num_or(p, "k", 0.0, where), gc);
            return make_boussinesq(scen::num_or(p, "a", 0.0, where),
                                   scen::num_or(p, "b", 0.0, where),
                                   scen::num_or(p, "d", 0.0, where),
                                   scen::num_or(p, "e", 0.0, where),
                                   scen::num_or(p, "p", 0.0, where),
                                   scen::num_or(p, "q", 0.0, where),
                                   scen::num_or(p, "r", 0.0, where),
                                   scen::num_or(p, "s", 0.0, where),
                                   scen::num_or(p, "f", 0.0, where),
                                   scen::num_field(p, "c", where),
                                   scen::num_or(p, "k", 0.0, where), gc);
        }
        std::string names;
        for (const auto& fm : family_catalog())
            names += (names.empty() ? "" : ", ") + fm.name;
        throw BadScenario("scenario.family: unknown family \"" + sc.family +
                          "\"; expected one of: " + names);
    }();

    if (sc.pert_kind == "monomials")
        set_monomial_perturbation(fi, MonomialPerturbation{sc.terms});
    return fi;
}

// Resolves the scenario grid against the instance's energy ceiling.
inline std::vector<double> scenario_h_grid(const FamilyInstance& fi,
                                           const GridSpec& g,
                                           int default_n = 64) {
    int n = g.n > 0 ? g.n : default_n;
    return default_h_grid(fi.model, n, g.cap, g.lo_frac, g.hi_frac);
}

} // namespace ptwave
