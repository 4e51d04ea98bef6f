#include "hsw/dynamics.hpp"

#include "hsw/diagnostics.hpp"
#include "hsw/errors.hpp"
#include "hsw/quadrature.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hsw {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// (ik)^order as a diagonal symbol; odd orders vanish at the Nyquist mode so
// real fields stay real.
RealField derivative(const RealField& u, int order) {
    const int nyq = u.grid().max_mode();
    return apply_symbol(u, [order, nyq](int k) -> cd {
        if ((order % 2 != 0) && k == nyq) return 0.0;
        return std::pow(kI * static_cast<double>(k), order);
    });
}

RealField multiply(const RealField& a, const RealField& b, bool dealias_products) {
    const Grid& g = a.grid();
    std::vector<double> sa = inverse_transform(a);
    std::vector<double> sb = inverse_transform(b);
    for (int i = 0; i < g.n_points; ++i) sa[i] *= sb[i];
    RealField prod = forward_transform(sa, g);
    return dealias_products ? dealias(prod) : prod;
}

bool all_finite(const RealField& u) {
    for (const auto& c : u.data())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

std::vector<cd> free_phases(const Grid& g, double t) {
    std::vector<cd> e(static_cast<size_t>(g.n_points));
    for (int i = 0; i < g.n_points; ++i)
        e[i] = std::exp(kI * (dispersion_phase(g.mode_of(i), g.j) * t));
    return e;
}

RealField free_flow(const RealField& u0, double t) {
    RealField out(u0.grid());
    std::vector<cd> e = free_phases(u0.grid(), t);
    for (size_t i = 0; i < e.size(); ++i) out.data()[i] = e[i] * u0.data()[i];
    return out;
}

} // namespace

double Trajectory::uniform_spacing() const {
    if (times.size() < 2)
        throw std::invalid_argument("Trajectory: at least two states required");
    double h = times[1] - times[0];
    for (size_t i = 1; i + 1 < times.size(); ++i) {
        if (std::abs((times[i + 1] - times[i]) - h) > 1e-12 * std::max(1.0, std::abs(h)))
            throw std::invalid_argument("Trajectory: non-uniform time spacing");
    }
    return h;
}

double dispersion_phase(int k, int j) {
    double sign = (j % 2 == 0) ? -1.0 : 1.0; // (-1)^{j+1}
    return sign * std::pow(static_cast<double>(k), 2 * j + 1);
}

RealField nonlinear_term(const RealField& u, bool dealias_products) {
    const Grid& g = u.grid();
    RealField ux = derivative(u, 1);
    RealField uu = multiply(u, u, dealias_products);
    RealField uxux = multiply(ux, ux, dealias_products);
    RealField out(g);
    for (int i = 0; i < g.n_points; ++i) {
        int k = g.mode_of(i);
        if (k == 0 || k == g.max_mode()) continue;
        cd a = uu.data()[i];
        cd b = uxux.data()[i];
        out.data()[i] = -kI * static_cast<double>(k) *
                        (0.5 * a + (a + 0.5 * b) / (1.0 + static_cast<double>(k) * k));
    }
    return out;
}

double original_form_residual(const RealField& u, const RealField& u_t) {
    if (!(u.grid() == u_t.grid()))
        throw std::invalid_argument("original_form_residual: grids differ");
    const Grid& g = u.grid();
    const int j = g.j;

    auto helmholtz = [](int k) -> cd { return 1.0 + static_cast<double>(k) * k; };
    RealField r = apply_symbol(u_t, helmholtz);

    const int nyq = g.max_mode();
    RealField disp = apply_symbol(u, [j, nyq, &helmholtz](int k) -> cd {
        if (k == nyq) return 0.0;
        return std::pow(kI * static_cast<double>(k), 2 * j + 1) * helmholtz(k);
    });

    RealField ux = derivative(u, 1);
    RealField uxx = derivative(u, 2);
    RealField uxxx = derivative(u, 3);
    RealField t1 = multiply(u, ux, false);
    RealField t2 = multiply(ux, uxx, false);
    RealField t3 = multiply(u, uxxx, false);

    double sum = 0.0;
    for (int i = 0; i < g.n_points; ++i) {
        cd v = r.data()[i] + disp.data()[i] + 3.0 * t1.data()[i] - 2.0 * t2.data()[i] -
               t3.data()[i];
        sum += std::norm(v);
    }
    return std::sqrt(sum);
}

RealField step(const RealField& u, const EvolutionParams& params) {
    const Grid& g = u.grid();
    const double h = params.dt;
    if (!(h > 0.0)) throw std::invalid_argument("step: dt must be positive");

    if (!params.nonlinearity) return project_zero_mean(free_flow(u, h));

    std::vector<cd> e_half = free_phases(g, h / 2.0);
    std::vector<cd> e_full = free_phases(g, h);
    const int n = g.n_points;

    auto nl = [&](const RealField& v) { return nonlinear_term(v, params.dealias); };

    RealField a1 = nl(u);
    RealField ua(g), ub(g), uc(g);
    for (int i = 0; i < n; ++i)
        ua.data()[i] = e_half[i] * (u.data()[i] + 0.5 * h * a1.data()[i]);
    RealField a2 = nl(ua);
    for (int i = 0; i < n; ++i)
        ub.data()[i] = e_half[i] * u.data()[i] + 0.5 * h * a2.data()[i];
    RealField a3 = nl(ub);
    for (int i = 0; i < n; ++i)
        uc.data()[i] = e_full[i] * u.data()[i] + h * e_half[i] * a3.data()[i];
    RealField a4 = nl(uc);

    RealField out(g);
    for (int i = 0; i < n; ++i) {
        out.data()[i] = e_full[i] * u.data()[i] +
                        (h / 6.0) * (e_full[i] * a1.data()[i] +
                                     2.0 * e_half[i] * (a2.data()[i] + a3.data()[i]) +
                                     a4.data()[i]);
    }
    out.data()[0] = 0.0;
    return out;
}

Trajectory evolve(const RealField& u0, const EvolutionParams& params, long record_every) {
    if (record_every < 1) throw std::invalid_argument("evolve: record_every must be >= 1");
    const Grid& g = u0.grid();

    Trajectory traj;
    RealField u = project_zero_mean(u0);
    if (params.dealias) u = dealias(u);

    if (params.t_end <= 0.0) {
        traj.times.push_back(0.0);
        traj.states.push_back(u);
        return traj;
    }

    long n_steps = std::llround(params.t_end / params.dt);
    if (n_steps < 1) n_steps = 1;
    EvolutionParams p = params;
    p.dt = params.t_end / static_cast<double>(n_steps);

    double advisory = p.dt * std::pow(static_cast<double>(g.max_mode()), 2 * g.j + 1);
    if (advisory > 50.0)
        traj.warnings.push_back("dt * (n_points/2)^{2j+1} = " + std::to_string(advisory) +
                                " exceeds the advisory cap of 50");

    traj.times.push_back(0.0);
    traj.states.push_back(u);
    for (long i = 1; i <= n_steps; ++i) {
        u = step(u, p);
        if (!all_finite(u))
            throw blow_up_error(i, i * p.dt,
                                "evolve: non-finite coefficient at step " + std::to_string(i));
        if (i % record_every == 0 || i == n_steps) {
            traj.times.push_back(i * p.dt);
            traj.states.push_back(u);
        }
    }
    return traj;
}

RealField duhamel_apply(const RealField& u0, const Trajectory& traj, double t,
                        bool nonlinearity) {
    const Grid& g = u0.grid();
    double h = traj.uniform_spacing();
    long idx = std::llround(t / h);
    if (idx < 0 || idx >= static_cast<long>(traj.size()) ||
        std::abs(t - traj.times[idx]) > 1e-9 * std::max(1.0, std::abs(t)))
        throw std::invalid_argument("duhamel_apply: t is not on the trajectory lattice");
    if (idx == 0) return traj.states[0];

    RealField out = free_flow(u0, t);
    if (!nonlinearity) return out;

    std::vector<double> w = quadrature_weights(static_cast<int>(idx));
    for (long i = 0; i <= idx; ++i) {
        RealField nhat = nonlinear_term(traj.states[i]);
        std::vector<cd> e = free_phases(g, t - traj.times[i]);
        for (int m = 0; m < g.n_points; ++m)
            out.data()[m] += h * w[i] * e[m] * nhat.data()[m];
    }
    return out;
}

PicardResult picard_iterate(const RealField& u0, double delta, int n_iter,
                            const EvolutionParams& params, double s) {
    if (!(delta > 0.0)) throw std::invalid_argument("picard_iterate: delta must be positive");
    if (n_iter < 1) throw std::invalid_argument("picard_iterate: n_iter must be >= 1");
    const Grid& g = u0.grid();
    const double h = params.dt;
    long n_t = std::llround(delta / h);
    if (n_t < 2) throw std::invalid_argument("picard_iterate: lattice too coarse for quadrature");

    RealField base = project_zero_mean(u0);
    if (params.dealias) base = dealias(base);

    Trajectory cur;
    for (long i = 0; i <= n_t; ++i) {
        cur.times.push_back(i * h);
        cur.states.push_back(free_flow(base, i * h));
    }

    PicardResult result;
    int n_growing = 0;
    for (int it = 0; it < n_iter; ++it) {
        // N-hat of the previous iterate, reused across all lattice times
        std::vector<RealField> nhat;
        nhat.reserve(cur.size());
        for (const auto& st : cur.states)
            nhat.push_back(params.nonlinearity ? nonlinear_term(st, params.dealias)
                                               : RealField(g));

        Trajectory next;
        next.times = cur.times;
        next.states.reserve(cur.size());
        next.states.push_back(base);
        for (long i = 1; i <= n_t; ++i) {
            double t = cur.times[i];
            RealField st = free_flow(base, t);
            std::vector<double> w = quadrature_weights(static_cast<int>(i));
            for (long l = 0; l <= i; ++l) {
                std::vector<cd> e = free_phases(g, t - cur.times[l]);
                for (int m = 0; m < g.n_points; ++m)
                    st.data()[m] += h * w[l] * e[m] * nhat[l].data()[m];
            }
            next.states.push_back(st);
        }

        double d = 0.0;
        for (size_t i = 0; i < next.size(); ++i) {
            RealField diff(g);
            for (int m = 0; m < g.n_points; ++m)
                diff.data()[m] = next.states[i].data()[m] - cur.states[i].data()[m];
            d = std::max(d, sobolev_norm(diff, s));
        }
        if (!result.distances.empty() && d > result.distances.back())
            ++n_growing;
        else
            n_growing = 0;
        result.distances.push_back(d);
        cur = std::move(next);
        if (n_growing >= 3) {
            result.contraction_failed = true;
            break;
        }
    }
    result.final_iterate = std::move(cur);
    return result;
}

} // namespace hsw
