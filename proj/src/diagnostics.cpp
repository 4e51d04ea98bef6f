#include "hsw/diagnostics.hpp"

#include <cmath>

namespace hsw {

double sobolev_norm(const RealField& u, double s) {
    const Grid& g = u.grid();
    double sum = 0.0;
    for (int i = 0; i < g.n_points; ++i) {
        int k = g.mode_of(i);
        double w = std::pow(1.0 + static_cast<double>(k) * k, s);
        sum += w * std::norm(u.data()[i]);
    }
    return std::sqrt(sum);
}

double h1_energy(const RealField& u) {
    double n = sobolev_norm(u, 1.0);
    return n * n;
}

std::vector<DiagnosticsRecord> record(const Trajectory& traj,
                                      const std::vector<double>& s_list) {
    std::vector<DiagnosticsRecord> out;
    out.reserve(traj.size());
    for (size_t i = 0; i < traj.size(); ++i) {
        DiagnosticsRecord r;
        r.time = traj.times[i];
        r.mean = traj.states[i].coeff(0).real();
        r.h1_energy = h1_energy(traj.states[i]);
        for (double s : s_list) r.hs_norms.emplace_back(s, sobolev_norm(traj.states[i], s));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace hsw
