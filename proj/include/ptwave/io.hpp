#pragma once

#include <charconv>
#include <ostream>
#include <string>

#include <json.hpp>

#include "abelian.hpp"
#include "designer.hpp"
#include "dynamics.hpp"
#include "zerofind.hpp"

namespace ptwave {

// Shortest decimal form that round-trips to the same double.
inline std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// CSV columns are exactly (h, M, quad_error), LF line endings.
inline void write_melnikov_csv(std::ostream& os, const MelnikovCurve& c) {
    os << "h,M,quad_error\n";
    for (const auto& s : c.samples)
        os << fmt_double(s.h) << ',' << fmt_double(s.M) << ','
           << fmt_double(s.quad_error) << '\n';
}

// Space-separated copy of the same columns for direct gnuplot consumption.
inline void write_melnikov_plot(std::ostream& os, const MelnikovCurve& c) {
    os << "# h M quad_error\n";
    for (const auto& s : c.samples)
        os << fmt_double(s.h) << ' ' << fmt_double(s.M) << ' '
           << fmt_double(s.quad_error) << '\n';
}

inline void write_profile_csv(std::ostream& os, const WaveProfile& wp) {
    os << "s,U\n";
    for (const auto& p : wp.samples)
        os << fmt_double(p.s) << ',' << fmt_double(p.u) << '\n';
}

inline void write_profile_plot(std::ostream& os, const WaveProfile& wp) {
    os << "# s U\n";
    for (const auto& p : wp.samples)
        os << fmt_double(p.s) << ' ' << fmt_double(p.u) << '\n';
}

inline nlohmann::ordered_json zero_to_json(const ZeroRecord& z) {
    return nlohmann::ordered_json{{"h", z.h_star},
                                  {"bracket_lo", z.bracket_lo},
                                  {"bracket_hi", z.bracket_hi},
                                  {"derivative", z.derivative_estimate},
                                  {"simple", z.simple},
                                  {"refinement_error", z.refinement_error}};
}

inline nlohmann::ordered_json zeros_to_json(const ZeroScan& scan) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["zeros"] = nlohmann::ordered_json::array();
    for (const auto& z : scan.zeros) j["zeros"].push_back(zero_to_json(z));
    j["warnings"] = scan.warnings;
    return j;
}

inline nlohmann::ordered_json design_to_json(const Design& d) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["condition_estimate"] = d.condition_estimate;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : d.perturbation.terms)
        j["terms"].push_back(nlohmann::ordered_json{
            {"q", t.q}, {"p", t.p}, {"d", t.d}});
    j["verified_zeros"] = nlohmann::ordered_json::array();
    for (const auto& z : d.verified)
        j["verified_zeros"].push_back(zero_to_json(z));
    j["target_residuals"] = d.residuals;
    return j;
}

inline nlohmann::ordered_json report_to_json(const LimitCycleReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["epsilon"] = r.epsilon;
    j["degenerate_continuum"] = r.degenerate_continuum;
    j["fixed_points"] = nlohmann::ordered_json::array();
    for (const auto& fp : r.fixed_points) {
        nlohmann::ordered_json e{{"x_section", fp.x_section},
                                 {"h_equiv", fp.h_equiv},
                                 {"stability", fp.attracting ? "attracting"
                                                             : "repelling"}};
        if (std::isfinite(fp.period_tau)) e["period_tau"] = fp.period_tau;
        j["fixed_points"].push_back(std::move(e));
    }
    j["matched_zeros"] = nlohmann::ordered_json::array();
    for (const auto& mz : r.matched_zeros)
        j["matched_zeros"].push_back(
            nlohmann::ordered_json{{"zero_h", mz.zero_h},
                                   {"cycle_h", mz.cycle_h},
                                   {"relative_gap", mz.relative_gap}});
    j["warnings"] = r.warnings;
    return j;
}

inline nlohmann::ordered_json profile_to_json(const WaveProfile& wp) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["h"] = wp.h;
    if (std::isfinite(wp.c)) j["c"] = wp.c;
    j["period_tau"] = wp.period_tau;
    j["period_s"] = wp.period_s;
    j["u_min"] = wp.u_min;
    j["u_max"] = wp.u_max;
    j["warnings"] = wp.warnings;
    return j;
}

} // namespace ptwave
