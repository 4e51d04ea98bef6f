#include "hsw/resonance.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hsw {

namespace {

BigInt odd_power(std::int64_t base, int j) {
    BigInt b = base;
    BigInt out = 1;
    for (int i = 0; i < 2 * j + 1; ++i) out *= b;
    return out;
}

struct Extreme {
    double ratio;
    std::array<std::int64_t, 3> arg;
};

bool lex_less(const std::array<std::int64_t, 3>& a, const std::array<std::int64_t, 3>& b) {
    return a < b;
}

void take_min(Extreme& best, const Extreme& cand) {
    if (cand.ratio < best.ratio ||
        (cand.ratio == best.ratio && lex_less(cand.arg, best.arg)))
        best = cand;
}

void take_max(Extreme& best, const Extreme& cand) {
    if (cand.ratio > best.ratio ||
        (cand.ratio == best.ratio && lex_less(cand.arg, best.arg)))
        best = cand;
}

ResonanceScanReport scan_block(int j, int k_max, std::int64_t k1_lo, std::int64_t k1_hi) {
    Extreme lo{std::numeric_limits<double>::infinity(), {0, 0, 0}};
    Extreme hi{-std::numeric_limits<double>::infinity(), {0, 0, 0}};
    std::int64_t violations = 0;
    for (std::int64_t k1 = k1_lo; k1 <= k1_hi; ++k1) {
        if (k1 == 0) continue;
        for (std::int64_t k2 = -k_max; k2 <= k_max; ++k2) {
            if (k2 == 0 || k1 + k2 == 0) continue;
            std::int64_t k = k1 + k2;
            BigInt omega = resonance_function(k1, k2, j);
            if (omega < 0) omega = -omega;
            std::int64_t a = std::abs(k), b = std::abs(k1), c = std::abs(k2);
            std::int64_t kmin = std::min({a, b, c});
            std::int64_t kmax_abs = std::max({a, b, c});
            BigInt denom = kmin;
            for (int p = 0; p < 2 * j; ++p) denom *= kmax_abs;
            double ratio = omega.convert_to<double>() / denom.convert_to<double>();
            if (!(ratio > 0.0)) ++violations;
            Extreme cand{ratio, {k, k1, k2}};
            take_min(lo, cand);
            take_max(hi, cand);
        }
    }
    ResonanceScanReport r;
    r.j = j;
    r.k_max = k_max;
    r.ratio_min = lo.ratio;
    r.ratio_max = hi.ratio;
    r.argmin = lo.arg;
    r.argmax = hi.arg;
    r.violations = violations;
    return r;
}

ResonanceScanReport merge(const ResonanceScanReport& a, const ResonanceScanReport& b) {
    ResonanceScanReport out = a;
    Extreme lo{a.ratio_min, a.argmin};
    take_min(lo, {b.ratio_min, b.argmin});
    Extreme hi{a.ratio_max, a.argmax};
    take_max(hi, {b.ratio_max, b.argmax});
    out.ratio_min = lo.ratio;
    out.argmin = lo.arg;
    out.ratio_max = hi.ratio;
    out.argmax = hi.arg;
    out.violations = a.violations + b.violations;
    return out;
}

} // namespace

BigInt resonance_function(std::int64_t k1, std::int64_t k2, int j) {
    if (j < 1) throw std::invalid_argument("resonance_function: j must be >= 1");
    return odd_power(k1 + k2, j) - odd_power(k1, j) - odd_power(k2, j);
}

ResonanceScanReport equivalence_scan_serial(int j, int k_max) {
    if (k_max < 2) throw std::invalid_argument("equivalence_scan: k_max must be >= 2");
    return scan_block(j, k_max, -k_max, k_max);
}

ResonanceScanReport equivalence_scan(int j, int k_max) {
    if (k_max < 2) throw std::invalid_argument("equivalence_scan: k_max must be >= 2");
    int n_threads = omp_get_max_threads();
    std::vector<ResonanceScanReport> partial(n_threads);
    std::vector<bool> used(n_threads, false);
#pragma omp parallel num_threads(n_threads)
    {
        int tid = omp_get_thread_num();
        int nt = omp_get_num_threads();
        std::int64_t span = 2 * static_cast<std::int64_t>(k_max) + 1;
        std::int64_t lo = -k_max + span * tid / nt;
        std::int64_t hi = -k_max + span * (tid + 1) / nt - 1;
        if (lo <= hi) {
            partial[tid] = scan_block(j, k_max, lo, hi);
            used[tid] = true;
        }
    }
    ResonanceScanReport out;
    bool have = false;
    for (int t = 0; t < n_threads; ++t) {
        if (!used[t]) continue;
        out = have ? merge(out, partial[t]) : partial[t];
        have = true;
    }
    return out;
}

std::int64_t annulus_count(std::int64_t k, int j, std::int64_t window,
                           std::int64_t k1_range) {
    if (k == 0) throw std::invalid_argument("annulus_count: k must be nonzero");
    if (window < 1) throw std::invalid_argument("annulus_count: window must be positive");
    if (k1_range < 1) throw std::invalid_argument("annulus_count: k1_range must be positive");
    std::vector<BigInt> values;
    values.reserve(2 * static_cast<size_t>(k1_range));
    for (std::int64_t k1 = -k1_range; k1 <= k1_range; ++k1) {
        if (k1 == 0 || k1 == k) continue;
        values.push_back(resonance_function(k1, k - k1, j));
    }
    std::sort(values.begin(), values.end());
    std::int64_t best = 0;
    size_t r = 0;
    for (size_t i = 0; i < values.size(); ++i) {
        if (r < i) r = i;
        BigInt top = values[i] + window;
        while (r < values.size() && values[r] <= top) ++r;
        best = std::max<std::int64_t>(best, static_cast<std::int64_t>(r - i));
    }
    return best;
}

} // namespace hsw
