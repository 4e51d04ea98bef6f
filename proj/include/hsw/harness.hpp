#ifndef HSW_HARNESS_HPP
#define HSW_HARNESS_HPP

#include "hsw/spectral.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace hsw::harness {

// Invalid or incomplete experiment configuration (exit code 2).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Cap the worker pool from HSW_THREADS, when set.
void init_threads();

// Initial-data profiles: "single_mode:<k>:<amplitude>",
// "broadband:<decay>:<seed>:<amplitude>" or "file:<path>".
RealField make_profile(const std::string& spec, const Grid& grid);

// Dispatch one subcommand; writes every artifact plus manifest.json under
// out_dir. Returns the process exit code: 0 success, 1 numerical failure
// (blow-up / non-contraction), 2 config error.
int run(const std::string& command, nlohmann::json config, const std::string& out_dir);

} // namespace hsw::harness

#endif
