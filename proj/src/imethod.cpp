#include "hsw/imethod.hpp"

#include "hsw/diagnostics.hpp"
#include "hsw/quadrature.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hsw {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

RealField product(const RealField& a, const RealField& b) {
    const Grid& g = a.grid();
    std::vector<double> sa = inverse_transform(a);
    std::vector<double> sb = inverse_transform(b);
    for (int i = 0; i < g.n_points; ++i) sa[i] *= sb[i];
    return dealias(forward_transform(sa, g));
}

RealField d_x(const RealField& u) {
    const int nyq = u.grid().max_mode();
    return apply_symbol(u, [nyq](int k) -> cd {
        return k == nyq ? cd{0.0, 0.0} : kI * static_cast<double>(k);
    });
}

double pairing(const RealField& f, const RealField& g) {
    return inner_product(f, g).real();
}

} // namespace

IMultiplier::IMultiplier(double s_, int n_cutoff_) : s(s_), n_cutoff(n_cutoff_) {
    if (!(s > 0.0 && s <= 1.0))
        throw std::invalid_argument("IMultiplier: s must lie in (0, 1]");
    if (n_cutoff < 1) throw std::invalid_argument("IMultiplier: N must be positive");
}

double multiplier(int k, const IMultiplier& im) {
    double ak = std::abs(static_cast<double>(k));
    if (ak <= im.n_cutoff) return 1.0;
    return std::pow(im.n_cutoff / ak, 1.0 - im.s);
}

RealField apply_I(const RealField& u, const IMultiplier& im) {
    const Grid& g = u.grid();
    RealField out(g);
    for (int i = 0; i < g.n_points; ++i)
        out.data()[i] = multiplier(g.mode_of(i), im) * u.data()[i];
    return out;
}

CommutatorTerms commutator_terms(const Trajectory& traj, const IMultiplier& im) {
    double h = traj.uniform_spacing();
    int m = static_cast<int>(traj.size()) - 1;
    std::vector<double> w = quadrature_weights(m);

    CommutatorTerms acc;
    for (int i = 0; i <= m; ++i) {
        const RealField& u = traj.states[i];
        RealField iu = apply_I(u, im);
        RealField iu_x = d_x(iu);
        RealField uu = product(u, u);
        RealField bracket_a(u.grid()); // I(u^2) - (Iu)^2
        {
            RealField iuu = apply_I(uu, im);
            RealField iu_sq = product(iu, iu);
            for (int l = 0; l < u.n_modes(); ++l)
                bracket_a.data()[l] = iuu.data()[l] - iu_sq.data()[l];
        }
        RealField ux = d_x(u);
        RealField bracket_b(u.grid()); // I(u_x^2) - (d_x Iu)^2
        {
            RealField iuxux = apply_I(product(ux, ux), im);
            RealField iux_sq = product(iu_x, iu_x);
            for (int l = 0; l < u.n_modes(); ++l)
                bracket_b.data()[l] = iuxux.data()[l] - iux_sq.data()[l];
        }
        const int nyq = u.grid().max_mode();
        RealField helm_iu_x = apply_symbol(iu, [nyq](int k) -> cd {
            if (k == nyq) return 0.0;
            return kI * static_cast<double>(k) * (1.0 + static_cast<double>(k) * k);
        });

        acc.t1 += h * w[i] * pairing(helm_iu_x, bracket_a);
        acc.t2 += 2.0 * h * w[i] * pairing(iu_x, bracket_a);
        acc.t3 += h * w[i] * pairing(iu_x, bracket_b);
    }
    return acc;
}

double energy_increment(const Trajectory& traj, const IMultiplier& im) {
    return h1_energy(apply_I(traj.back(), im)) - h1_energy(apply_I(traj.front(), im));
}

ScalingReport scaling_study(const RealField& u0, double delta,
                            const std::vector<IMultiplier>& im_list,
                            const EvolutionParams& params) {
    if (im_list.size() < 4)
        throw std::invalid_argument("scaling_study: at least 4 cutoffs required");
    const Grid& g = u0.grid();
    int smallest_active = g.max_mode();
    for (int i = 0; i < g.n_points; ++i) {
        int k = std::abs(g.mode_of(i));
        if (k > 0 && std::abs(u0.data()[i]) > 0.0) smallest_active = std::min(smallest_active, k);
    }
    for (size_t i = 0; i < im_list.size(); ++i) {
        if (std::abs(im_list[i].s - im_list[0].s) > 1e-12)
            throw std::invalid_argument("scaling_study: cutoffs must share one s");
        if (i > 0 && im_list[i].n_cutoff <= im_list[i - 1].n_cutoff)
            throw std::invalid_argument("scaling_study: N values must be distinct ascending");
        if (im_list[i].n_cutoff > g.n_points / 3 || im_list[i].n_cutoff < smallest_active)
            throw std::invalid_argument(
                "scaling_study: N must lie within [smallest active mode, n_points/3]");
    }

    EvolutionParams p = params;
    p.t_end = delta;
    long n_steps = std::llround(delta / p.dt);
    long record_every = std::max<long>(1, n_steps / 200);
    Trajectory traj = evolve(u0, p, record_every);

    std::vector<ScalingEntry> table(im_list.size());
#pragma omp parallel for schedule(static)
    for (size_t i = 0; i < im_list.size(); ++i) {
        double inc = energy_increment(traj, im_list[i]);
        table[i] = {im_list[i].n_cutoff, inc, std::abs(inc), std::abs(inc) < 1e-14};
    }
    return fit_scaling(std::move(table));
}

ScalingReport fit_scaling(std::vector<ScalingEntry> table) {
    ScalingReport report;
    report.table = std::move(table);

    std::vector<double> xs, ys;
    for (auto& e : report.table) {
        e.excluded = e.abs_increment < 1e-14;
        if (e.excluded) continue;
        xs.push_back(std::log(static_cast<double>(e.n_cutoff)));
        ys.push_back(std::log(e.abs_increment));
    }
    if (xs.size() < 2) {
        report.degenerate = true;
        return report;
    }
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    report.intercept = (sy - report.slope * sx) / n;
    double ss = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (report.slope * xs[i] + report.intercept);
        ss += r * r;
    }
    report.residual = std::sqrt(ss / n);
    return report;
}

} // namespace hsw
