#ifndef HSW_IO_HPP
#define HSW_IO_HPP

#include "hsw/diagnostics.hpp"
#include "hsw/dynamics.hpp"
#include "hsw/spectral.hpp"

#include <string>
#include <vector>

namespace hsw::io {

// 17 significant digits; round-trips any double.
std::string fmt(double x);

// Field snapshot: CSV with header `k,re,im`, stored modes ascending.
void write_field_csv(const std::string& path, const RealField& field);
RealField read_field_csv(const std::string& path, const Grid& grid);

// Trajectory dump: t_<index>.csv snapshots plus times.csv (`index,time`).
std::vector<std::string> write_trajectory(const std::string& dir, const Trajectory& traj);

// Diagnostics: `time,mean,h1_energy,hs_<s>...`
void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records);
void write_diagnostics_jsonl(const std::string& path,
                             const std::vector<DiagnosticsRecord>& records);

void write_text(const std::string& path, const std::string& content);

} // namespace hsw::io

#endif
