// ptwave command line front end.
//
// Subcommands: catalog, melnikov, design, verify, profile. One JSON
// scenario document drives everything; outputs are CSV (full round-trip
// doubles, LF endings) and JSON. Exit codes: 0 success, 1 numerical
// failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptwave/io.hpp"
#include "ptwave/ptwave.hpp"
#include "ptwave/scenario.hpp"

namespace {

using nlohmann::ordered_json;

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ptwave::InputError("cannot open output file: " + path);
    out << body;
}

void write_json_file(const std::string& path, const ordered_json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

struct CommonArgs {
    std::string scenario_path;
    std::string out_prefix;
    bool plot_data = false;
};

int cmd_catalog(const std::string& family_filter, bool as_json) {
    const auto& cat = ptwave::family_catalog();
    bool found = false;
    ordered_json arr = ordered_json::array();
    for (const auto& fm : cat) {
        if (!family_filter.empty() && fm.name != family_filter) continue;
        found = true;
        if (as_json) {
            arr.push_back(ordered_json{{"family", fm.name},
                                       {"params", fm.params},
                                       {"validity", fm.validity}});
        } else {
            std::cout << fm.name << "\n  params:   " << fm.params
                      << "\n  validity: " << fm.validity << "\n";
        }
    }
    if (!family_filter.empty() && !found)
        throw ptwave::InputError("catalog: unknown family \"" +
                                 family_filter + "\"");
    if (as_json) std::cout << arr.dump(2) << "\n";
    return 0;
}

// Shared front half: load scenario, build instance.
ptwave::FamilyInstance load_instance(const CommonArgs& args,
                                     ptwave::Scenario& sc) {
    sc = ptwave::load_scenario(args.scenario_path);
    return ptwave::build_instance(sc);
}

int cmd_melnikov(const CommonArgs& args, double tol) {
    ptwave::Scenario sc;
    ptwave::FamilyInstance fi = load_instance(args, sc);
    std::vector<double> grid = ptwave::scenario_h_grid(fi, sc.grid, 64);
    ptwave::MelnikovCurve curve =
        ptwave::melnikov_curve(fi.model, fi.pert_integrand, grid, tol);
    ptwave::ZeroScan scan =
        ptwave::find_zeros(fi.model, fi.pert_integrand, curve, tol);

    std::ostringstream csv;
    ptwave::write_melnikov_csv(csv, curve);
    write_text_file(args.out_prefix + ".csv", csv.str());
    write_json_file(args.out_prefix + "_zeros.json",
                    ptwave::zeros_to_json(scan));
    if (args.plot_data) {
        std::ostringstream dat;
        ptwave::write_melnikov_plot(dat, curve);
        write_text_file(args.out_prefix + ".dat", dat.str());
    }
    std::cout << "family " << sc.family << ": " << curve.samples.size()
              << " samples on [" << ptwave::fmt_double(curve.h_lo) << ", "
              << ptwave::fmt_double(curve.h_hi) << "], "
              << scan.zeros.size() << " zero(s)\n";
    for (const auto& z : scan.zeros)
        std::cout << "  zero h = " << ptwave::fmt_double(z.h_star)
                  << (z.simple ? " (simple)" : " (NOT certified simple)")
                  << "\n";
    for (const auto& w : scan.warnings) std::cout << "  warning: " << w
                                                  << "\n";
    return 0;
}

int cmd_design(const CommonArgs& args, double tol) {
    ptwave::Scenario sc;
    ptwave::FamilyInstance fi = load_instance(args, sc);
    if (sc.targets.empty())
        throw ptwave::BadScenario("design: scenario.targets is required");
    if (sc.exponents.empty())
        throw ptwave::BadScenario("design: scenario.exponents is required "
                                  "(one [q,p] pair per basis term, "
                                  "targets+1 of them)");
    ptwave::Design d =
        ptwave::place_zeros(fi.model, sc.exponents, sc.targets, tol);
    write_json_file(args.out_prefix + "_design.json",
                    ptwave::design_to_json(d));

    // zero report of the designed perturbation over the scenario grid
    ptwave::GridSpec g = sc.grid;
    if (g.cap <= 0.0 && !std::isfinite(fi.model.h_ceiling()))
        g.cap = 4.0 * sc.targets.back();
    std::vector<double> grid = ptwave::scenario_h_grid(fi, g, 64);
    ptwave::MelnikovCurve curve =
        ptwave::melnikov_curve(fi.model, d.perturbation, grid, tol);
    ptwave::ZeroScan scan =
        ptwave::find_zeros(fi.model, d.perturbation, curve, tol);
    write_json_file(args.out_prefix + "_zeros.json",
                    ptwave::zeros_to_json(scan));
    if (args.plot_data) {
        std::ostringstream dat;
        ptwave::write_melnikov_plot(dat, curve);
        write_text_file(args.out_prefix + ".dat", dat.str());
    }
    std::cout << "design: " << d.coefficients.size() << " coefficients, "
              << "condition estimate "
              << ptwave::fmt_double(d.condition_estimate) << "\n";
    for (std::size_t i = 0; i < d.perturbation.terms.size(); ++i) {
        const auto& t = d.perturbation.terms[i];
        std::cout << "  d[" << i << "] = " << ptwave::fmt_double(t.d)
                  << "  (x^" << 2 * t.q << " y^" << 2 * t.p - 1 << ")\n";
    }
    std::cout << "verified zeros:";
    for (const auto& z : d.verified)
        std::cout << " " << ptwave::fmt_double(z.h_star);
    std::cout << "\n";
    return 0;
}

int cmd_verify(const CommonArgs& args, double tol) {
    ptwave::Scenario sc;
    ptwave::FamilyInstance fi = load_instance(args, sc);
    std::vector<double> eps = sc.epsilons;
    if (eps.empty()) eps = {1e-3};

    // Melnikov zeros once, for matching.
    std::vector<double> grid = ptwave::scenario_h_grid(fi, sc.grid, 64);
    ptwave::MelnikovCurve curve =
        ptwave::melnikov_curve(fi.model, fi.pert_integrand, grid, tol);
    ptwave::ZeroScan scan =
        ptwave::find_zeros(fi.model, fi.pert_integrand, curve, tol);
    std::vector<double> zero_hs;
    for (const auto& z : scan.zeros) zero_hs.push_back(z.h_star);

    int n_seeds = sc.grid.n > 0 ? sc.grid.n : 128;
    ordered_json out;
    out["schema"] = "1";
    out["family"] = sc.family;
    out["melnikov_zeros"] = zero_hs;
    out["reports"] = ordered_json::array();
    std::cout << "verify: " << zero_hs.size() << " Melnikov zero(s)\n";
    for (double e : eps) {
        ptwave::LimitCycleReport rep = ptwave::detect_limit_cycles(
            fi.model, fi.pert_integrand, e, n_seeds, sc.grid.cap, zero_hs);
        out["reports"].push_back(ptwave::report_to_json(rep));
        std::cout << "  eps = " << ptwave::fmt_double(e) << ": ";
        if (rep.degenerate_continuum) {
            std::cout << "degenerate continuum (every orbit closes)\n";
            continue;
        }
        std::cout << rep.fixed_points.size() << " cycle(s)";
        double worst = 0.0;
        for (const auto& mz : rep.matched_zeros)
            worst = std::max(worst, mz.relative_gap);
        if (!rep.matched_zeros.empty())
            std::cout << ", worst relative gap "
                      << ptwave::fmt_double(worst);
        std::cout << "\n";
    }
    write_json_file(args.out_prefix + "_verify.json", out);
    return 0;
}

int cmd_profile(const CommonArgs& args, double h, int n_samples,
                double tau_cap) {
    ptwave::Scenario sc;
    ptwave::FamilyInstance fi = load_instance(args, sc);
    ptwave::WaveProfile wp = ptwave::wave_profile(fi, h, n_samples, tau_cap);

    std::ostringstream csv;
    ptwave::write_profile_csv(csv, wp);
    write_text_file(args.out_prefix + "_profile.csv", csv.str());
    write_json_file(args.out_prefix + "_profile.json",
                    ptwave::profile_to_json(wp));
    if (args.plot_data) {
        std::ostringstream dat;
        ptwave::write_profile_plot(dat, wp);
        write_text_file(args.out_prefix + "_profile.dat", dat.str());
    }
    std::cout << "profile: h = " << ptwave::fmt_double(wp.h)
              << ", period_s = " << ptwave::fmt_double(wp.period_s)
              << ", U in [" << ptwave::fmt_double(wp.u_min) << ", "
              << ptwave::fmt_double(wp.u_max) << "]\n";
    for (const auto& w : wp.warnings) std::cout << "  warning: " << w
                                                << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ptwave: which periodic traveling waves survive a "
                 "perturbation"};
    app.require_subcommand(1);
    int threads = 1;
    double tol = 1e-10;
    app.add_option("--threads", threads, "worker threads for grid sweeps");
    app.add_option("--tol", tol, "quadrature absolute tolerance");

    std::string family_filter;
    bool catalog_json = false;
    auto* catalog = app.add_subcommand("catalog",
                                       "list wave families and validity");
    catalog->add_option("--family", family_filter, "show one family only");
    catalog->add_flag("--json", catalog_json, "machine-readable listing");

    auto add_common = [](CLI::App* sub, CommonArgs& a) {
        sub->add_option("scenario", a.scenario_path, "scenario JSON file")
            ->required();
        sub->add_option("--out", a.out_prefix, "output file prefix")
            ->required();
        sub->add_flag("--plot-data", a.plot_data,
                      "also write gnuplot-ready columns");
    };
    CommonArgs mel_args, des_args, ver_args, pro_args;
    auto* melnikov = app.add_subcommand(
        "melnikov", "sample M(h) and report certified zeros");
    add_common(melnikov, mel_args);
    auto* design = app.add_subcommand(
        "design", "place Melnikov zeros at scenario targets");
    add_common(design, des_args);
    auto* verify = app.add_subcommand(
        "verify", "hunt limit cycles of the perturbed flow per epsilon");
    add_common(verify, ver_args);
    auto* profile = app.add_subcommand(
        "profile", "reconstruct one traveling wave profile U(s)");
    add_common(profile, pro_args);
    double prof_h = 0.0, prof_cap = 0.0;
    int prof_samples = 257;
    profile->add_option("--energy", prof_h, "orbit energy in (0, h_ceiling)")
        ->required();
    profile->add_option("--samples", prof_samples,
                        "number of profile samples (default 257)");
    profile->add_option("--tau-cap", prof_cap,
                        "integration time cap (default 10 periods)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        ptwave::set_threads(threads);
        if (app.got_subcommand(catalog))
            return cmd_catalog(family_filter, catalog_json);
        if (app.got_subcommand(melnikov)) return cmd_melnikov(mel_args, tol);
        if (app.got_subcommand(design)) return cmd_design(des_args, tol);
        if (app.got_subcommand(verify)) return cmd_verify(ver_args, tol);
        if (app.got_subcommand(profile))
            return cmd_profile(pro_args, prof_h, prof_samples, prof_cap);
    } catch (const ptwave::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ptwave::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
