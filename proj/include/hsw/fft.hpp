#ifndef HSW_FFT_HPP
#define HSW_FFT_HPP

#include <complex>

namespace hsw::fft {

// In-place unnormalized DFT of length n. sign = -1 is the forward transform
// (e^{-i...}), sign = +1 the inverse. Thread-safe; plans are cached per size.
void transform(std::complex<double>* data, int n, int sign);

// In-place unnormalized 2D DFT of an n0 x n1 row-major array.
void transform_2d(std::complex<double>* data, int n0, int n1, int sign);

} // namespace hsw::fft

#endif
