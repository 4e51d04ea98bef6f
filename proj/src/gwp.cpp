#include "hsw/gwp.hpp"

#include "hsw/diagnostics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hsw {

GrowthLaw growth_exponents(int j, double s, double epsilon) {
    if (j < 1) throw std::domain_error("growth_exponents: j must be >= 1");
    if (epsilon < 0.0) epsilon = 1e-6 / (2.0 * j + 1.0);
    double eps_cap = 1.0 / (10000.0 * (2.0 * j + 1.0));
    if (!(epsilon > 0.0 && epsilon < eps_cap))
        throw std::domain_error("growth_exponents: epsilon must lie in (0, 1/(10000(2j+1)))");
    double s_min = (2.0 * j + 1.0 - static_cast<double>(j) * j) / (2.0 * j + 1.0);
    if (!(s > s_min && s <= 1.0)) {
        std::ostringstream msg;
        msg << "growth_exponents: s must lie in (" << s_min << ", 1], the strict threshold "
            << "(2j+1-j^2)/(2j+1) for j=" << j;
        throw std::domain_error(msg.str());
    }

    GrowthLaw law;
    law.j = j;
    law.s = s;
    law.epsilon = epsilon;
    law.f_j = (2.0 * j + 1.0) / (j - 3.0 * (2.0 * j + 1.0) * epsilon);
    double denom = j - law.f_j * (1.0 - s);
    if (!(denom > 0.0))
        throw std::domain_error("growth_exponents: j - f(j)(1-s) must be positive");
    law.exponent_T = (1.0 - s) / denom;
    law.exponent_data = j / denom;
    return law;
}

CampaignResult growth_campaign(const RealField& u0, int j, double s, double t_end,
                               const EvolutionParams& params, long record_every) {
    CampaignResult result;
    result.law = growth_exponents(j, s);

    EvolutionParams p = params;
    p.j = j;
    p.t_end = t_end;
    Trajectory traj = evolve(u0, p, record_every);

    double sup = 0.0;
    for (size_t i = 0; i < traj.size(); ++i) {
        sup = std::max(sup, sobolev_norm(traj.states[i], s));
        result.times.push_back(traj.times[i]);
        result.sup_hs.push_back(sup);
    }

    // Fit over the tail t >= t_end/10 where log t is well separated from the
    // start-up transient.
    double t_lo = t_end / 10.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long n = 0;
    for (size_t i = 0; i < result.times.size(); ++i) {
        if (result.times[i] < t_lo || result.sup_hs[i] <= 0.0) continue;
        double x = std::log(result.times[i]);
        double y = std::log(result.sup_hs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n >= 2 && (n * sxx - sx * sx) > 0.0)
        result.measured_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return result;
}

} // namespace hsw
