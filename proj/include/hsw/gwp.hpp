#ifndef HSW_GWP_HPP
#define HSW_GWP_HPP

#include "hsw/dynamics.hpp"
#include "hsw/spectral.hpp"

#include <vector>

namespace hsw {

// Polynomial growth law sup_{[0,T]} ||u||_{H^s} <= C T^{exponent_T} ||u0||_{H^s}^{exponent_data}
// with f_j = (2j+1)/(j - 3(2j+1) epsilon).
struct GrowthLaw {
    int j = 0;
    double s = 0.0;
    double epsilon = 0.0;
    double f_j = 0.0;
    double exponent_T = 0.0;
    double exponent_data = 0.0;
};

// epsilon < 0 selects the default 1e-6/(2j+1). Throws std::domain_error when
// s is outside ((2j+1-j^2)/(2j+1), 1] or the law degenerates.
GrowthLaw growth_exponents(int j, double s, double epsilon = -1.0);

struct CampaignResult {
    GrowthLaw law;
    std::vector<double> times;
    std::vector<double> sup_hs; // running supremum of ||u(t)||_{H^s}
    double measured_exponent = 0.0;
};

// Long-horizon evolution recording the running sup of the H^s norm and the
// least-squares slope of log(sup) against log(t) over the tail of the run.
CampaignResult growth_campaign(const RealField& u0, int j, double s, double t_end,
                               const EvolutionParams& params, long record_every);

} // namespace hsw

#endif
