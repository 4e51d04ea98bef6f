#include "hsw/spectral.hpp"

#include "hsw/errors.hpp"
#include "hsw/fft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsw {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double max_abs(const std::vector<std::complex<double>>& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

} // namespace

Grid::Grid(int n_points_, int j_) : n_points(n_points_), j(j_) {
    if (!is_power_of_two(n_points) || n_points < 8)
        throw std::invalid_argument("Grid: n_points must be a power of two >= 8");
    if (j < 1) throw std::invalid_argument("Grid: j must be >= 1");
}

RealField forward_transform(std::span<const double> samples, const Grid& grid) {
    if (static_cast<int>(samples.size()) != grid.n_points)
        throw std::invalid_argument("forward_transform: sample count does not match grid");
    RealField out(grid);
    auto& c = out.data();
    for (int i = 0; i < grid.n_points; ++i) c[i] = samples[i];
    fft::transform(c.data(), grid.n_points, -1);
    const double scale = 1.0 / grid.n_points;
    for (auto& z : c) z *= scale;
    return out;
}

std::vector<double> inverse_transform(const RealField& field) {
    const Grid& g = field.grid();
    std::vector<std::complex<double>> c = field.data();
    fft::transform(c.data(), g.n_points, +1);
    double scale = max_abs(c);
    double worst = 0.0;
    for (const auto& z : c) worst = std::max(worst, std::abs(z.imag()));
    if (scale > 0.0 && worst > 1e-12 * std::max(scale, 1.0))
        throw symmetry_error("inverse_transform: coefficients are not Hermitian-symmetric");
    std::vector<double> samples(g.n_points);
    for (int i = 0; i < g.n_points; ++i) samples[i] = c[i].real();
    return samples;
}

RealField apply_symbol(const RealField& field,
                       const std::function<std::complex<double>(int)>& symbol,
                       bool require_real) {
    const Grid& g = field.grid();
    if (require_real) {
        for (int k = 1; k < g.max_mode(); ++k) {
            std::complex<double> a = symbol(k);
            std::complex<double> b = symbol(-k);
            double mag = std::max({std::abs(a), std::abs(b), 1.0});
            if (std::abs(a - std::conj(b)) > 1e-13 * mag)
                throw symmetry_error("apply_symbol: symbol breaks Hermitian symmetry");
        }
        if (std::abs(symbol(0).imag()) > 1e-13 * std::max(std::abs(symbol(0)), 1.0))
            throw symmetry_error("apply_symbol: symbol breaks Hermitian symmetry at k=0");
    }
    RealField out(g);
    for (int i = 0; i < g.n_points; ++i) {
        int k = g.mode_of(i);
        out.data()[i] = symbol(k) * field.data()[i];
    }
    return out;
}

RealField dealias(const RealField& field) {
    const Grid& g = field.grid();
    RealField out = field;
    const int cutoff = g.n_points / 3;
    for (int i = 0; i < g.n_points; ++i) {
        if (std::abs(g.mode_of(i)) > cutoff) out.data()[i] = 0.0;
    }
    return out;
}

RealField project_zero_mean(const RealField& field) {
    RealField out = field;
    out.data()[0] = 0.0;
    return out;
}

double hermitian_defect(const RealField& field) {
    const Grid& g = field.grid();
    double scale = std::max(max_abs(field.data()), 1e-300);
    double worst = std::abs(field.coeff(0).imag());
    for (int k = 1; k < g.max_mode(); ++k)
        worst = std::max(worst, std::abs(field.coeff(k) - std::conj(field.coeff(-k))));
    worst = std::max(worst, std::abs(field.coeff(g.max_mode()).imag()));
    return worst / scale;
}

std::complex<double> inner_product(const RealField& f, const RealField& g) {
    if (!(f.grid() == g.grid()))
        throw std::invalid_argument("inner_product: grids differ");
    std::complex<double> acc = 0.0;
    for (int i = 0; i < f.n_modes(); ++i) acc += f.data()[i] * std::conj(g.data()[i]);
    return acc;
}

} // namespace hsw
