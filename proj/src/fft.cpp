#include "hsw/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hsw::fft {

namespace {

std::mutex plan_mutex;

fftw_plan cached_plan_1d(int n, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<fftw_complex> buf(n);
    fftw_plan p = fftw_plan_dft_1d(n, buf.data(), buf.data(), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw_plan_dft_1d failed");
    cache.emplace(key, p);
    return p;
}

fftw_plan cached_plan_2d(int n0, int n1, int sign) {
    static std::map<std::tuple<int, int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(n0, n1, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<fftw_complex> buf(static_cast<size_t>(n0) * n1);
    fftw_plan p = fftw_plan_dft_2d(n0, n1, buf.data(), buf.data(), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw_plan_dft_2d failed");
    cache.emplace(key, p);
    return p;
}

} // namespace

void transform(std::complex<double>* data, int n, int sign) {
    fftw_plan p = cached_plan_1d(n, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, raw, raw);
}

void transform_2d(std::complex<double>* data, int n0, int n1, int sign) {
    fftw_plan p = cached_plan_2d(n0, n1, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
    auto* raw = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, raw, raw);
}

} // namespace hsw::fft
