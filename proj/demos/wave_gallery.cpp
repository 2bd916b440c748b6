// Reconstructs one mid-annulus traveling wave profile U(s) for each
// catalog family and writes them as CSV files in the working directory.

#include <cstdio>
#include <fstream>
#include <vector>

#include "ptwave/ptwave.hpp"

namespace {

void dump(const char* path, const ptwave::WaveProfile& wp) {
    std::ofstream out(path);
    out << "s,U\n";
    for (const auto& p : wp.samples) out << p.s << ',' << p.u << '\n';
    std::printf("%-28s h = %-10.4g period_s = %-10.6g U in [%.6g, %.6g]\n",
                path, wp.h, wp.period_s, wp.u_min, wp.u_max);
}

void profile_of(const char* path, const ptwave::FamilyInstance& fi,
                double frac_or_h) {
    double top = fi.model.h_ceiling();
    double h = std::isfinite(top) ? frac_or_h * top : frac_or_h;
    dump(path, ptwave::wave_profile(fi, h, 513));
}

} // namespace

int main() {
    using namespace ptwave;
    auto none = zero_gc();
    profile_of("toy.csv", make_toy(1, 0, 0, 0, {}), 0.5);
    profile_of("ostrovsky.csv", make_ostrovsky(1.0, none), 0.5);
    profile_of("klein_gordon.csv",
               make_klein_gordon(1.0, 3, 1.5, none), 0.5);
    profile_of("sine_gordon.csv",
               make_sine_gordon(std::sqrt(2.0), none), 0.9);
    profile_of("kdv.csv", make_kdv(1.0, 0.0, none), 0.5);
    profile_of("rosenau_hyman.csv",
               make_rosenau_hyman(1.0, 1.0, 0.0, 2, none), 0.5);
    profile_of("camassa_holm.csv",
               make_camassa_holm_preset("camassa_holm", 1.0, 3.0, 0.0, none),
               0.5);
    profile_of("boussinesq.csv",
               make_boussinesq_classical(2.0, 0.0, none), 0.5);
    return 0;
}
