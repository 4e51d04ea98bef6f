// Command-line front end: one subcommand per experiment, a JSON config file
// as the base layer, and explicit flags overriding individual fields.

#include "hsw/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct Overrides {
    json values = json::object();
    std::string config_path;
    std::string out_dir;

    json merged(const std::string& command) {
        json config = json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "config error: cannot open " << config_path << "\n";
                std::exit(2);
            }
            try {
                in >> config;
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                std::exit(2);
            }
        }
        for (auto& [key, value] : values.items()) config[key] = value;
        if (out_dir.empty())
            out_dir = config.value("out_dir", "runs/" + command);
        config.erase("out_dir");
        return config;
    }
};

void add_common(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--config", ov.config_path, "JSON config file (flags override it)");
    cmd->add_option("--out", ov.out_dir, "run directory for artifacts");
}

template <typename T>
void bind(CLI::App* cmd, const std::string& flag, const std::string& key, Overrides& ov,
          const std::string& help) {
    auto holder = std::make_shared<T>();
    cmd->add_option_function<T>(
           flag, [&ov, key, holder](const T& v) { ov.values[key] = v; }, help)
        ->expected(1);
    (void)holder;
}

void bind_flag(CLI::App* cmd, const std::string& flag, const std::string& key,
               Overrides& ov, const std::string& help) {
    cmd->add_flag_callback(
        flag, [&ov, key]() { ov.values[key] = true; }, help);
}

void bind_list(CLI::App* cmd, const std::string& flag, const std::string& key,
               Overrides& ov, const std::string& help) {
    cmd->add_option_function<std::vector<long>>(
        flag, [&ov, key](const std::vector<long>& v) { ov.values[key] = v; }, help);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-spectral laboratory for a higher-order shallow water equation"};
    app.require_subcommand(1);

    struct Entry {
        CLI::App* cmd;
        Overrides ov;
    };
    std::vector<std::pair<std::string, Entry*>> entries;
    auto make = [&](const std::string& name, const std::string& desc) -> Entry& {
        auto* e = new Entry{app.add_subcommand(name, desc), {}};
        add_common(e->cmd, e->ov);
        entries.emplace_back(name, e);
        return *e;
    };

    {
        auto& e = make("simulate", "evolve initial data and record diagnostics");
        bind<long>(e.cmd, "--j", "j", e.ov, "dispersion order");
        bind<long>(e.cmd, "--n-points", "n_points", e.ov, "spatial grid size");
        bind<double>(e.cmd, "--dt", "dt", e.ov, "time step");
        bind<double>(e.cmd, "--t-end", "t_end", e.ov, "final time");
        bind<std::string>(e.cmd, "--profile", "profile", e.ov, "initial-data profile");
        bind<long>(e.cmd, "--record-every", "record_every", e.ov, "steps between records");
        bind_flag(e.cmd, "--dump-trajectory", "dump_trajectory", e.ov, "write every state");
        bind_flag(e.cmd, "--linear-only", "linear_only", e.ov, "free flow only");
    }
    {
        auto& e = make("picard-check", "iterate the Duhamel map and test contraction");
        bind<long>(e.cmd, "--j", "j", e.ov, "dispersion order");
        bind<long>(e.cmd, "--n-points", "n_points", e.ov, "spatial grid size");
        bind<double>(e.cmd, "--dt", "dt", e.ov, "time lattice spacing");
        bind<double>(e.cmd, "--delta", "delta", e.ov, "contraction window");
        bind<long>(e.cmd, "--n-iter", "n_iter", e.ov, "iterations");
        bind<double>(e.cmd, "--s", "s", e.ov, "Sobolev index of the distance");
        bind<std::string>(e.cmd, "--profile", "profile", e.ov, "initial-data profile");
    }
    {
        auto& e = make("imethod-scan", "modified-energy increments across cutoffs");
        bind<long>(e.cmd, "--j", "j", e.ov, "dispersion order");
        bind<long>(e.cmd, "--n-points", "n_points", e.ov, "spatial grid size");
        bind<double>(e.cmd, "--dt", "dt", e.ov, "time step");
        bind<double>(e.cmd, "--s", "s", e.ov, "target regularity");
        bind<double>(e.cmd, "--delta", "delta", e.ov, "local window");
        bind<std::string>(e.cmd, "--profile", "profile", e.ov, "initial-data profile");
        bind_list(e.cmd, "--N", "N_list", e.ov, "frequency cutoffs (ascending)");
    }
    {
        auto& e = make("resonance-verify", "exhaustive resonance-ratio scan");
        bind<long>(e.cmd, "--j", "j", e.ov, "dispersion order");
        bind<long>(e.cmd, "--k-max", "k_max", e.ov, "frequency range");
    }
    {
        auto& e = make("annulus-count", "lattice points per resonance window");
        bind<long>(e.cmd, "--j", "j", e.ov, "dispersion order");
        bind<long>(e.cmd, "--k", "k", e.ov, "output frequency");
        bind<long>(e.cmd, "--k1-range", "k1_range", e.ov, "input frequency range");
        bind_list(e.cmd, "--M", "M_list", e.ov, "window widths");
    }
    {
        auto& e = make("l4-probe", "Monte-Carlo check of the space-time L4 bound");
        bind<long>(e.cmd, "--j", "j", e.ov, "dispersion order");
        bind<long>(e.cmd, "--n-points", "n_points", e.ov, "spatial grid size");
        bind<long>(e.cmd, "--n-time", "n_time", e.ov, "temporal grid size");
        bind<double>(e.cmd, "--t-window", "t_window", e.ov, "time window length");
        bind<long>(e.cmd, "--n-samples", "n_samples", e.ov, "ensemble size");
        bind<long>(e.cmd, "--seed", "seed", e.ov, "ensemble seed");
        bind_flag(e.cmd, "--emit-ratios", "emit_ratios", e.ov, "write per-sample ratios");
    }
    {
        auto& e = make("bilinear-probe", "Monte-Carlo check of a bilinear estimate");
        bind<long>(e.cmd, "--j", "j", e.ov, "dispersion order");
        bind<long>(e.cmd, "--n-points", "n_points", e.ov, "spatial grid size");
        bind<long>(e.cmd, "--n-time", "n_time", e.ov, "temporal grid size");
        bind<double>(e.cmd, "--t-window", "t_window", e.ov, "time window length");
        bind<long>(e.cmd, "--n-samples", "n_samples", e.ov, "ensemble size");
        bind<long>(e.cmd, "--seed", "seed", e.ov, "ensemble seed");
        bind<double>(e.cmd, "--s", "s", e.ov, "regularity index");
        bind<std::string>(e.cmd, "--form", "form", e.ov, "lemma31 or lemma32");
        bind_flag(e.cmd, "--emit-ratios", "emit_ratios", e.ov, "write per-sample ratios");
    }
    {
        auto& e = make("growth-campaign", "long-horizon Sobolev growth measurement");
        bind<long>(e.cmd, "--j", "j", e.ov, "dispersion order");
        bind<long>(e.cmd, "--n-points", "n_points", e.ov, "spatial grid size");
        bind<double>(e.cmd, "--dt", "dt", e.ov, "time step");
        bind<double>(e.cmd, "--t-end", "t_end", e.ov, "horizon");
        bind<double>(e.cmd, "--s", "s", e.ov, "Sobolev index");
        bind<std::string>(e.cmd, "--profile", "profile", e.ov, "initial-data profile");
        bind<long>(e.cmd, "--record-every", "record_every", e.ov, "steps between records");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    for (auto& [name, entry] : entries) {
        if (entry->cmd->parsed()) {
            json config = entry->ov.merged(name);
            return hsw::harness::run(name, std::move(config), entry->ov.out_dir);
        }
    }
    return 2;
}
