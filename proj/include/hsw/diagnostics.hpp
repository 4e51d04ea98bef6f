#ifndef HSW_DIAGNOSTICS_HPP
#define HSW_DIAGNOSTICS_HPP

#include "hsw/dynamics.hpp"
#include "hsw/spectral.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hsw {

struct DiagnosticsRecord {
    double time = 0.0;
    double mean = 0.0;
    double h1_energy = 0.0;
    std::vector<std::pair<double, double>> hs_norms; // (s, norm)
    std::optional<double> i_energy;
};

// (sum_k (1+k^2)^s |coeff(k)|^2)^{1/2}
double sobolev_norm(const RealField& u, double s);

// Conserved H^1 energy: sobolev_norm(u, 1)^2.
double h1_energy(const RealField& u);

std::vector<DiagnosticsRecord> record(const Trajectory& traj,
                                      const std::vector<double>& s_list);

} // namespace hsw

#endif
