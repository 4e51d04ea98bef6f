#ifndef HSW_RESONANCE_HPP
#define HSW_RESONANCE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>

namespace hsw {

using BigInt = boost::multiprecision::cpp_int;

// Omega = (k1+k2)^{2j+1} - k1^{2j+1} - k2^{2j+1}, exact.
BigInt resonance_function(std::int64_t k1, std::int64_t k2, int j);

struct ResonanceScanReport {
    int j = 0;
    int k_max = 0;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    std::array<std::int64_t, 3> argmin{}; // (k, k1, k2)
    std::array<std::int64_t, 3> argmax{};
    std::int64_t violations = 0; // ratios <= 0
};

// Exhaustive scan of |Omega| / (|k_min| |k_max|^{2j}) over nonzero k1, k2
// with |k1|, |k2| <= k_max and k = k1 + k2 != 0; k_min/k_max are the
// min/max of |k|, |k1|, |k2|. Deterministic regardless of partitioning.
ResonanceScanReport equivalence_scan(int j, int k_max);
ResonanceScanReport equivalence_scan_serial(int j, int k_max);

// Max over window placements mu0 (taken at every attained Omega value) of
// #{k1 : 0 < |k1| <= k1_range, k1 != k, Omega(k1, k-k1) in [mu0, mu0+M]}.
std::int64_t annulus_count(std::int64_t k, int j, std::int64_t window,
                           std::int64_t k1_range);

} // namespace hsw

#endif
