#ifndef HSW_QUADRATURE_HPP
#define HSW_QUADRATURE_HPP

#include <vector>

namespace hsw {

// Composite Simpson weights on m uniform intervals (m+1 points); odd m >= 3
// closes with the 3/8 rule, m == 1 falls back to the trapezoid. Weights do
// not include the spacing factor.
inline std::vector<double> quadrature_weights(int m) {
    std::vector<double> w(static_cast<size_t>(m) + 1, 0.0);
    if (m == 0) return w;
    if (m == 1) {
        w[0] = w[1] = 0.5;
        return w;
    }
    int simpson_end = (m % 2 == 0) ? m : m - 3;
    for (int i = 0; i < simpson_end; i += 2) {
        w[i] += 1.0 / 3.0;
        w[i + 1] += 4.0 / 3.0;
        w[i + 2] += 1.0 / 3.0;
    }
    if (m % 2 != 0) {
        w[m - 3] += 3.0 / 8.0;
        w[m - 2] += 9.0 / 8.0;
        w[m - 1] += 9.0 / 8.0;
        w[m] += 3.0 / 8.0;
    }
    return w;
}

} // namespace hsw

#endif
