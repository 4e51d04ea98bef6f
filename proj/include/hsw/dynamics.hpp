#ifndef HSW_DYNAMICS_HPP
#define HSW_DYNAMICS_HPP

#include "hsw/spectral.hpp"

#include <string>
#include <vector>

namespace hsw {

struct EvolutionParams {
    int j = 1;
    double dt = 1e-4;
    double t_end = 1.0;
    bool dealias = true;
    bool nonlinearity = true; // switch off to evolve the free flow
};

struct Trajectory {
    std::vector<double> times;
    std::vector<RealField> states;
    std::vector<std::string> warnings;

    size_t size() const { return times.size(); }
    const RealField& front() const { return states.front(); }
    const RealField& back() const { return states.back(); }

    // Uniform recording step; throws std::invalid_argument when the spacing
    // is non-uniform beyond 1e-12 relative.
    double uniform_spacing() const;
};

// Phase speed of the free evolution: omega(k) = (-1)^{j+1} k^{2j+1}, so the
// free solution is coeff(k,t) = e^{i omega(k) t} coeff(k,0).
double dispersion_phase(int k, int j);

// N(u) = -1/2 d_x(u^2) - d_x (1-d_x^2)^{-1} [u^2 + 1/2 u_x^2], with both
// quadratic products dealiased when requested. Output is zero-mean.
RealField nonlinear_term(const RealField& u, bool dealias_products = true);

// L2 norm of (1-d_x^2) u_t + d_x^{2j+1} (1-d_x^2) u + 3 u u_x
// - 2 u_x u_xx - u u_xxx; the cross-check that the nonlocal form and the
// original form define the same flow.
double original_form_residual(const RealField& u, const RealField& u_t);

// One integrating-factor RK4 step of size params.dt.
RealField step(const RealField& u, const EvolutionParams& params);

// Repeated stepping over [0, t_end], storing a state every record_every
// steps plus the final state. Throws blow_up_error on non-finite
// coefficients.
Trajectory evolve(const RealField& u0, const EvolutionParams& params, long record_every);

// S(t) u0 + int_0^t S(t-t') N(u(t')) dt', the time integral by composite
// Simpson quadrature over the trajectory's stored (uniform) time lattice.
// t must coincide with a lattice point.
RealField duhamel_apply(const RealField& u0, const Trajectory& traj, double t,
                        bool nonlinearity = true);

struct PicardResult {
    std::vector<double> distances; // sup-in-time H^s distance to previous iterate
    Trajectory final_iterate;
    bool contraction_failed = false; // distances grew for 3 consecutive iterations
};

// Picard iteration of the Duhamel map on the lattice of spacing params.dt
// over [0, delta]; iterate 0 is the free evolution of u0.
PicardResult picard_iterate(const RealField& u0, double delta, int n_iter,
                            const EvolutionParams& params, double s = 1.0);

} // namespace hsw

#endif
