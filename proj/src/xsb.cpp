#include "hsw/xsb.hpp"

#include "hsw/dynamics.hpp"
#include "hsw/fft.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hsw {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double bracket(double x) { return std::sqrt(1.0 + x * x); } // <x>

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t master, long idx) {
    return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(idx) + 1));
}

// Mixed random ensemble: with probability 1/2 a broadband Gaussian field,
// otherwise Gaussian amplitudes concentrated on the free-solution line
// tau = omega(k) (the regime that stresses Strichartz-type bounds).
SpaceTimeField draw_sample(const Grid& grid, int n_time, double t_window,
                           std::mt19937_64& rng) {
    SpaceTimeField F(grid, n_time, t_window);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const bool concentrated = (rng() & 1u) != 0;
    const int k_top = grid.max_mode() - 1;
    const int m_top = n_time / 2 - 1;
    if (concentrated) {
        for (int k = 1; k <= k_top; ++k) {
            double omega = dispersion_phase(k, grid.j);
            long m_star = std::lround(omega / F.dtau());
            if (std::abs(m_star) > m_top) continue;
            cd z{gauss(rng), gauss(rng)};
            F.at(k, static_cast<int>(m_star)) = z;
            F.at(-k, static_cast<int>(-m_star)) = std::conj(z);
        }
    } else {
        for (int k = 1; k <= k_top; ++k) {
            for (int m = -m_top; m <= m_top; ++m) {
                cd z{gauss(rng), gauss(rng)};
                F.at(k, m) = z;
                F.at(-k, -m) = std::conj(z);
            }
        }
    }
    return F;
}

// Physical samples on the (x, t) lattice via the unnormalized inverse 2D DFT.
std::vector<cd> to_samples(const SpaceTimeField& F) {
    std::vector<cd> v = F.coeffs;
    fft::transform_2d(v.data(), F.grid.n_points, F.n_time, +1);
    return v;
}

double l4_norm(const SpaceTimeField& F) {
    std::vector<cd> v = to_samples(F);
    const double dx = kTwoPi / F.grid.n_points;
    const double dt = F.t_window / F.n_time;
    double sum = 0.0;
    for (const auto& z : v) {
        double a2 = std::norm(z);
        sum += a2 * a2;
    }
    return std::pow(sum * dx * dt, 0.25);
}

struct ProbeKernel {
    const Grid& grid;
    int n_time;
    double t_window;
    std::uint64_t seed;

    // Evaluates one sample; resamples on a zero denominator.
    template <typename RatioFn>
    double evaluate(long idx, RatioFn&& ratio_of, long& degenerate) const {
        std::mt19937_64 rng(sample_seed(seed, idx));
        for (;;) {
            double r = ratio_of(rng);
            if (std::isfinite(r)) return r;
            ++degenerate;
        }
    }
};

ProbeReport reduce_ratios(const std::vector<double>& ratios,
                          const std::vector<long>& degenerate, const Grid& grid,
                          int n_time) {
    ProbeReport rep;
    rep.n_samples = static_cast<long>(ratios.size());
    rep.n_points = grid.n_points;
    rep.n_time = n_time;
    double sum = 0.0;
    for (long i = 0; i < rep.n_samples; ++i) {
        sum += ratios[i];
        if (ratios[i] > rep.ratio_max) {
            rep.ratio_max = ratios[i];
            rep.argmax_sample = i;
        }
        rep.n_degenerate += degenerate[i];
    }
    rep.ratio_mean = rep.n_samples > 0 ? sum / rep.n_samples : 0.0;
    return rep;
}

} // namespace

SpaceTimeField::SpaceTimeField(const Grid& grid_, int n_time_, double t_window_)
    : grid(grid_), n_time(n_time_), t_window(t_window_),
      coeffs(static_cast<size_t>(grid_.n_points) * n_time_) {
    if (!is_power_of_two(n_time) || n_time < 8)
        throw std::invalid_argument("SpaceTimeField: n_time must be a power of two >= 8");
    if (!(t_window > 0.0))
        throw std::invalid_argument("SpaceTimeField: t_window must be positive");
}

double SpaceTimeField::sigma(int k, int tau_mode) const {
    return tau_mode * dtau() - dispersion_phase(k, grid.j);
}

double xsb_norm(const SpaceTimeField& F, double s, double b) {
    double sum = 0.0;
    for (int ik = 0; ik < F.grid.n_points; ++ik) {
        int k = F.grid.mode_of(ik);
        double wk = std::pow(1.0 + static_cast<double>(k) * k, s);
        for (int im = 0; im < F.n_time; ++im) {
            cd z = F.coeffs[static_cast<size_t>(ik) * F.n_time + im];
            if (z == cd{}) continue;
            double sg = bracket(F.sigma(k, F.tau_mode_of(im)));
            sum += wk * std::pow(sg, 2.0 * b) * std::norm(z);
        }
    }
    return std::sqrt(sum * F.dtau());
}

double ys_norm(const SpaceTimeField& F, double s) {
    double l2l1 = 0.0;
    for (int ik = 0; ik < F.grid.n_points; ++ik) {
        int k = F.grid.mode_of(ik);
        double wk = std::pow(1.0 + static_cast<double>(k) * k, s);
        double inner = 0.0;
        for (int im = 0; im < F.n_time; ++im)
            inner += std::abs(F.coeffs[static_cast<size_t>(ik) * F.n_time + im]);
        inner *= F.dtau();
        l2l1 += wk * inner * inner;
    }
    return xsb_norm(F, s, 0.5) + std::sqrt(l2l1);
}

double zs_norm(const SpaceTimeField& F, double s) {
    double l2l1 = 0.0;
    for (int ik = 0; ik < F.grid.n_points; ++ik) {
        int k = F.grid.mode_of(ik);
        double wk = std::pow(1.0 + static_cast<double>(k) * k, s);
        double inner = 0.0;
        for (int im = 0; im < F.n_time; ++im) {
            cd z = F.coeffs[static_cast<size_t>(ik) * F.n_time + im];
            if (z == cd{}) continue;
            inner += std::abs(z) / std::sqrt(bracket(F.sigma(k, F.tau_mode_of(im))));
        }
        inner *= F.dtau();
        l2l1 += wk * inner * inner;
    }
    return xsb_norm(F, s, -0.5) + std::sqrt(l2l1);
}

ProbeReport l4_probe(long n_samples, const Grid& grid, int n_time, double t_window,
                     std::uint64_t seed, bool parallel, std::vector<double>* ratios_out) {
    if (n_samples < 1) throw std::invalid_argument("l4_probe: n_samples must be >= 1");
    const double b_exp = (grid.j + 1.0) / (2.0 * (2 * grid.j + 1.0));
    ProbeKernel kernel{grid, n_time, t_window, seed};

    std::vector<double> ratios(n_samples);
    std::vector<long> degenerate(n_samples, 0);
    auto one = [&](long i) {
        ratios[i] = kernel.evaluate(
            i,
            [&](std::mt19937_64& rng) {
                SpaceTimeField F = draw_sample(grid, n_time, t_window, rng);
                double denom = xsb_norm(F, 0.0, b_exp);
                if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
                return l4_norm(F) / denom;
            },
            degenerate[i]);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n_samples; ++i) one(i);
    } else {
        for (long i = 0; i < n_samples; ++i) one(i);
    }
    if (ratios_out) *ratios_out = ratios;
    return reduce_ratios(ratios, degenerate, grid, n_time);
}

ProbeReport bilinear_probe(BilinearForm form, double s, long n_samples, const Grid& grid,
                           int n_time, double t_window, std::uint64_t seed, bool parallel,
                           std::vector<double>* ratios_out) {
    if (n_samples < 1) throw std::invalid_argument("bilinear_probe: n_samples must be >= 1");
    const double s_min = form == BilinearForm::helmholtz_gradient ? (2.0 - grid.j) / 2.0
                                                                  : -grid.j / 2.0;
    if (s < s_min - 1e-12)
        throw std::invalid_argument("bilinear_probe: s below the validity threshold");

    const int n = grid.n_points;
    const int nt = n_time;
    ProbeKernel kernel{grid, n_time, t_window, seed};

    auto form_ratio = [&](std::mt19937_64& rng) {
        SpaceTimeField u1 = draw_sample(grid, nt, t_window, rng);
        SpaceTimeField u2 = draw_sample(grid, nt, t_window, rng);
        double denom = xsb_norm(u1, s, 0.5) * xsb_norm(u2, s, 0.5);
        if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();

        auto factor_samples = [&](const SpaceTimeField& u) {
            SpaceTimeField w = u;
            if (form == BilinearForm::helmholtz_gradient) {
                for (int ik = 0; ik < n; ++ik) {
                    int k = grid.mode_of(ik);
                    cd sym = (k == grid.max_mode()) ? cd{} : kI * static_cast<double>(k);
                    for (int im = 0; im < nt; ++im)
                        w.coeffs[static_cast<size_t>(ik) * nt + im] *= sym;
                }
            }
            return to_samples(w);
        };
        std::vector<cd> v1 = factor_samples(u1);
        std::vector<cd> v2 = factor_samples(u2);
        for (size_t i = 0; i < v1.size(); ++i) v1[i] *= v2[i];
        fft::transform_2d(v1.data(), n, nt, -1);
        const double scale = 1.0 / (static_cast<double>(n) * nt);

        SpaceTimeField B(grid, nt, t_window);
        for (int ik = 0; ik < n; ++ik) {
            int k = grid.mode_of(ik);
            if (k == 0 || std::abs(k) > n / 3) continue;
            cd outer = kI * static_cast<double>(k);
            if (form == BilinearForm::helmholtz_gradient)
                outer /= 1.0 + static_cast<double>(k) * k;
            for (int im = 0; im < nt; ++im) {
                if (std::abs(B.tau_mode_of(im)) > nt / 3) continue;
                B.coeffs[static_cast<size_t>(ik) * nt + im] =
                    outer * scale * v1[static_cast<size_t>(ik) * nt + im];
            }
        }
        return xsb_norm(B, s, -0.5) / denom;
    };

    std::vector<double> ratios(n_samples);
    std::vector<long> degenerate(n_samples, 0);
    auto one = [&](long i) { ratios[i] = kernel.evaluate(i, form_ratio, degenerate[i]); };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n_samples; ++i) one(i);
    } else {
        for (long i = 0; i < n_samples; ++i) one(i);
    }
    if (ratios_out) *ratios_out = ratios;
    return reduce_ratios(ratios, degenerate, grid, n_time);
}

} // namespace hsw
