#ifndef HSW_SPECTRAL_HPP
#define HSW_SPECTRAL_HPP

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace hsw {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Spatial lattice on [0, 2*pi) together with the equation order j.
// n_points must be a power of two >= 8; the active modes are
// -n_points/2 < k <= n_points/2.
struct Grid {
    int n_points;
    int j;

    Grid(int n_points_, int j_);

    double spacing() const { return kTwoPi / n_points; }
    int max_mode() const { return n_points / 2; }

    // Mode of storage index i (FFT layout: 0, 1, ..., n/2, -n/2+1, ..., -1).
    int mode_of(int idx) const { return idx <= n_points / 2 ? idx : idx - n_points; }
    int index_of(int k) const { return k >= 0 ? k : k + n_points; }

    bool operator==(const Grid& o) const { return n_points == o.n_points && j == o.j; }
};

// Real 2*pi-periodic function stored as Fourier coefficients under the
// 1/(2*pi) forward normalization, FFT storage order.
class RealField {
public:
    explicit RealField(const Grid& grid)
        : grid_(grid), coeffs_(static_cast<size_t>(grid.n_points)) {}

    const Grid& grid() const { return grid_; }
    int n_modes() const { return grid_.n_points; }

    std::complex<double> coeff(int k) const { return coeffs_[grid_.index_of(k)]; }
    void set_coeff(int k, std::complex<double> c) { coeffs_[grid_.index_of(k)] = c; }

    std::vector<std::complex<double>>& data() { return coeffs_; }
    const std::vector<std::complex<double>>& data() const { return coeffs_; }

private:
    Grid grid_;
    std::vector<std::complex<double>> coeffs_;
};

// Forward transform of n_points real samples; throws std::invalid_argument on
// a length mismatch.
RealField forward_transform(std::span<const double> samples, const Grid& grid);

// Inverse transform back to samples. An imaginary residue above 1e-12
// relative to the field magnitude raises symmetry_error.
std::vector<double> inverse_transform(const RealField& field);

// Diagonal Fourier multiplier. With require_real set, the symbol must satisfy
// symbol(-k) == conj(symbol(k)) (checked, symmetry_error otherwise).
RealField apply_symbol(const RealField& field,
                       const std::function<std::complex<double>(int)>& symbol,
                       bool require_real = true);

// Two-thirds rule: zero every mode with |k| > n_points/3. Idempotent.
RealField dealias(const RealField& field);

// Pin the k = 0 coefficient to zero, leaving all other modes unchanged.
RealField project_zero_mean(const RealField& field);

// Largest relative deviation from coeff(-k) == conj(coeff(k)).
double hermitian_defect(const RealField& field);

// sum_k f(k) * conj(g(k)); equals (1/2pi) * integral of f*g for real fields.
std::complex<double> inner_product(const RealField& f, const RealField& g);

} // namespace hsw

#endif
