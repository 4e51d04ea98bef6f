#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsw/diagnostics.hpp"
#include "hsw/dynamics.hpp"
#include "hsw/errors.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace hsw;
using cd = std::complex<double>;

namespace {

RealField cosine(const Grid& g, int k, double amp) {
    RealField u(g);
    u.set_coeff(k, cd{amp / 2, 0});
    u.set_coeff(-k, cd{amp / 2, 0});
    return u;
}

// Random real field supported on |k| <= k_top.
RealField band_limited(const Grid& g, int k_top, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealField u(g);
    for (int k = 1; k <= k_top; ++k) {
        cd z{gauss(rng), gauss(rng)};
        u.set_coeff(k, z);
        u.set_coeff(-k, std::conj(z));
    }
    return u;
}

double h1_distance(const RealField& a, const RealField& b) {
    RealField d(a.grid());
    for (int i = 0; i < a.n_modes(); ++i) d.data()[i] = a.data()[i] - b.data()[i];
    return sobolev_norm(d, 1.0);
}

} // namespace

TEST_CASE("dispersion phase") {
    CHECK(dispersion_phase(2, 1) == 8.0);    // (-1)^2 * 2^3
    CHECK(dispersion_phase(1, 2) == -1.0);   // (-1)^3 * 1^5
    CHECK(dispersion_phase(-2, 1) == -8.0);  // odd in k
    CHECK(dispersion_phase(3, 3) == 2187.0); // 3^7
    CHECK(dispersion_phase(0, 1) == 0.0);
}

TEST_CASE("nonlinear term of a pure cosine") {
    // N(cos x) = (3/5) sin 2x: the Burgers part gives sin(2x)/2 via
    // -1/2 d_x(cos^2), the nonlocal part adds sin(2x)/10.
    Grid g(64, 1);
    RealField n = nonlinear_term(cosine(g, 1, 1.0));
    CHECK(std::abs(n.coeff(2) - cd{0.0, -0.3}) < 1e-14);
    CHECK(std::abs(n.coeff(-2) - cd{0.0, 0.3}) < 1e-14);
    CHECK(std::abs(n.coeff(0)) < 1e-15);
    CHECK(std::abs(n.coeff(1)) < 1e-14);
    CHECK(std::abs(n.coeff(4)) < 1e-14);
}

TEST_CASE("free flow phase rotation") {
    Grid g(32, 1);
    EvolutionParams p;
    p.j = 1;
    p.dt = 1e-3;
    p.t_end = M_PI;
    p.nonlinearity = false;
    Trajectory traj = evolve(cosine(g, 1, 1.0), p, 1000000);
    // coeff(1, pi) = e^{i omega(1) pi} / 2 = e^{i pi} / 2 = -1/2
    CHECK(std::abs(traj.back().coeff(1) - cd{-0.5, 0.0}) < 1e-10);
    CHECK(std::abs(traj.back().coeff(-1) - cd{-0.5, 0.0}) < 1e-10);
}

TEST_CASE("original-form residual vanishes on the derived time derivative") {
    std::mt19937_64 rng(11);
    for (int j = 1; j <= 3; ++j) {
        Grid g(64, j);
        RealField u = band_limited(g, g.n_points / 8, rng);
        RealField nl = nonlinear_term(u, false);
        RealField lin = apply_symbol(u, [&](int k) -> cd {
            if (k == g.max_mode()) return {};
            return cd{0.0, 1.0} * dispersion_phase(k, j); // d/dt = i omega
        });
        RealField u_t(g);
        for (int i = 0; i < g.n_points; ++i) u_t.data()[i] = lin.data()[i] + nl.data()[i];
        double scale = sobolev_norm(u_t, 2.0) + 1.0;
        CHECK(original_form_residual(u, u_t) / scale < 1e-10);
    }
}

TEST_CASE("fourth-order convergence of the stepper") {
    Grid g(64, 1);
    RealField u0 = cosine(g, 1, 0.5);
    EvolutionParams p;
    p.j = 1;
    p.t_end = 0.1;

    auto final_state = [&](double dt) {
        EvolutionParams q = p;
        q.dt = dt;
        return evolve(u0, q, 1000000).back();
    };
    RealField ref = final_state(1e-5);
    double e1 = h1_distance(final_state(4e-3), ref);
    double e2 = h1_distance(final_state(2e-3), ref);
    double order = std::log2(e1 / e2);
    CHECK(order > 3.7);
    CHECK(order < 4.3);
}

TEST_CASE("evolve conserves the H1 energy and the zero mean") {
    Grid g(128, 1);
    EvolutionParams p;
    p.j = 1;
    p.dt = 1e-3;
    p.t_end = 1.0;
    Trajectory traj = evolve(cosine(g, 1, 0.4), p, 100);
    double e0 = h1_energy(traj.front());
    for (const auto& state : traj.states) {
        CHECK(std::abs(h1_energy(state) - e0) / e0 < 1e-10);
        CHECK(state.coeff(0) == cd{0.0, 0.0});
    }
}

TEST_CASE("evolve reports blow-up") {
    Grid g(64, 1);
    EvolutionParams p;
    p.j = 1;
    p.dt = 0.5; // grossly unstable for this amplitude
    p.t_end = 50.0;
    CHECK_THROWS_AS(evolve(cosine(g, 1, 20.0), p, 1), blow_up_error);
}

TEST_CASE("duhamel map reduces to the free flow without nonlinearity") {
    Grid g(32, 1);
    RealField u0 = cosine(g, 2, 0.3);
    EvolutionParams p;
    p.j = 1;
    p.dt = 1e-3;
    p.t_end = 0.1;
    Trajectory traj = evolve(u0, p, 1);
    RealField v = duhamel_apply(u0, traj, 0.1, false);
    cd expect = std::polar(0.15, dispersion_phase(2, 1) * 0.1);
    CHECK(std::abs(v.coeff(2) - expect) < 1e-12);
}

TEST_CASE("duhamel map requires a lattice time") {
    Grid g(32, 1);
    RealField u0 = cosine(g, 1, 0.1);
    EvolutionParams p;
    p.j = 1;
    p.dt = 1e-2;
    p.t_end = 0.1;
    Trajectory traj = evolve(u0, p, 1);
    CHECK_THROWS_AS(duhamel_apply(u0, traj, 0.055, true), std::invalid_argument);
}

TEST_CASE("picard iteration contracts on small data") {
    Grid g(64, 1);
    EvolutionParams p;
    p.j = 1;
    p.dt = 5e-4;
    PicardResult r = picard_iterate(cosine(g, 1, 0.1), 0.04, 5, p, 1.0);
    REQUIRE(r.distances.size() == 5);
    CHECK_FALSE(r.contraction_failed);
    for (size_t i = 1; i < r.distances.size(); ++i)
        CHECK(r.distances[i] < 0.5 * r.distances[i - 1]);
}
