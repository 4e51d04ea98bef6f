// Timing comparison between the serial reference kernels and their
// OpenMP-parallel counterparts. The two must agree bit for bit; the serial
// versions exist so tests can pin that down, this tool reports the speedup.

#include "hsw/harness.hpp"
#include "hsw/resonance.hpp"
#include "hsw/xsb.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

namespace {

double time_once(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx\n", name, serial, parallel,
                parallel > 0.0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    hsw::harness::init_threads();
    std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const int j = 1, k_max = 512;
        hsw::ResonanceScanReport rs, rp;
        double ts = time_once([&] { rs = hsw::equivalence_scan_serial(j, k_max); });
        double tp = time_once([&] { rp = hsw::equivalence_scan(j, k_max); });
        row("equivalence_scan (k=512)", ts, tp);
        if (rs.ratio_min != rp.ratio_min || rs.ratio_max != rp.ratio_max) {
            std::printf("MISMATCH: serial and parallel scans disagree\n");
            return 1;
        }
    }
    {
        hsw::Grid grid(128, 1);
        const long n_samples = 200;
        hsw::ProbeReport rs, rp;
        double ts = time_once(
            [&] { rs = hsw::l4_probe(n_samples, grid, 128, hsw::kTwoPi, 7, false); });
        double tp = time_once(
            [&] { rp = hsw::l4_probe(n_samples, grid, 128, hsw::kTwoPi, 7, true); });
        row("l4_probe (n=128, 200)", ts, tp);
        if (rs.ratio_max != rp.ratio_max || rs.ratio_mean != rp.ratio_mean) {
            std::printf("MISMATCH: serial and parallel probes disagree\n");
            return 1;
        }
    }
    return 0;
}
