#ifndef HSW_XSB_HPP
#define HSW_XSB_HPP

#include "hsw/spectral.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace hsw {

// Space-time Fourier lattice: coefficients F(k, tau) with tau on the lattice
// (2pi/t_window) * {-n_time/2+1, ..., n_time/2}. Row-major storage
// [k_index * n_time + tau_index], both axes in FFT layout.
struct SpaceTimeField {
    Grid grid;
    int n_time;
    double t_window;
    std::vector<std::complex<double>> coeffs;

    SpaceTimeField(const Grid& grid_, int n_time_, double t_window_);

    double dtau() const { return kTwoPi / t_window; }
    int tau_mode_of(int idx) const { return idx <= n_time / 2 ? idx : idx - n_time; }
    int tau_index_of(int m) const { return m >= 0 ? m : m + n_time; }

    std::complex<double>& at(int k, int tau_mode) {
        return coeffs[static_cast<size_t>(grid.index_of(k)) * n_time + tau_index_of(tau_mode)];
    }
    std::complex<double> at(int k, int tau_mode) const {
        return coeffs[static_cast<size_t>(grid.index_of(k)) * n_time + tau_index_of(tau_mode)];
    }

    // sigma(k, tau) = tau - omega(k); free solutions sit at sigma = 0.
    double sigma(int k, int tau_mode) const;
};

// (sum <k>^{2s} <sigma>^{2b} |F|^2 dtau)^{1/2}
double xsb_norm(const SpaceTimeField& F, double s, double b);

// xsb_norm(F, s, 1/2) + (sum_k <k>^{2s} (sum_tau |F| dtau)^2)^{1/2}
double ys_norm(const SpaceTimeField& F, double s);

// xsb_norm(F, s, -1/2) + (sum_k <k>^{2s} (sum_tau |F| <sigma>^{-1/2} dtau)^2)^{1/2}
double zs_norm(const SpaceTimeField& F, double s);

struct ProbeReport {
    long n_samples = 0;
    double ratio_max = 0.0;
    double ratio_mean = 0.0;
    long argmax_sample = -1;
    int n_points = 0;
    int n_time = 0;
    long n_degenerate = 0; // zero-denominator draws that were resampled
};

// Monte-Carlo probe of the L^4 Strichartz-type bound: per-sample ratio
// ||v||_{L4} / xsb_norm(F, 0, (j+1)/(2(2j+1))) over a mixed ensemble, half
// broadband Gaussian, half concentrated on the free-solution line.
ProbeReport l4_probe(long n_samples, const Grid& grid, int n_time, double t_window,
                     std::uint64_t seed, bool parallel = true,
                     std::vector<double>* ratios_out = nullptr);

enum class BilinearForm {
    helmholtz_gradient, // d_x (1-d_x^2)^{-1} [d_x u1 * d_x u2]
    gradient_product,   // d_x [u1 * u2]
};

// Ratio xsb_norm(B(u1,u2), s, -1/2) / (xsb_norm(u1, s, 1/2) * xsb_norm(u2, s, 1/2))
// over random pairs. Validity thresholds: s >= (2-j)/2 for helmholtz_gradient,
// s >= -j/2 for gradient_product.
ProbeReport bilinear_probe(BilinearForm form, double s, long n_samples, const Grid& grid,
                           int n_time, double t_window, std::uint64_t seed,
                           bool parallel = true, std::vector<double>* ratios_out = nullptr);

} // namespace hsw

#endif
