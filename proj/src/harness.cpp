#include "hsw/harness.hpp"

#include "hsw/diagnostics.hpp"
#include "hsw/dynamics.hpp"
#include "hsw/errors.hpp"
#include "hsw/gwp.hpp"
#include "hsw/imethod.hpp"
#include "hsw/io.hpp"
#include "hsw/resonance.hpp"
#include "hsw/xsb.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

namespace hsw::harness {

namespace {

using nlohmann::json;

double num(const json& c, const std::string& key) {
    if (!c.contains(key) || !c[key].is_number())
        throw config_error("missing or non-numeric config field: " + key);
    return c[key].get<double>();
}

double num_or(const json& c, const std::string& key, double def) {
    return c.contains(key) ? num(c, key) : def;
}

long integer(const json& c, const std::string& key) {
    if (!c.contains(key) || !c[key].is_number_integer())
        throw config_error("missing or non-integer config field: " + key);
    return c[key].get<long>();
}

long integer_or(const json& c, const std::string& key, long def) {
    return c.contains(key) ? integer(c, key) : def;
}

std::string text(const json& c, const std::string& key) {
    if (!c.contains(key) || !c[key].is_string())
        throw config_error("missing or non-string config field: " + key);
    return c[key].get<std::string>();
}

std::string text_or(const json& c, const std::string& key, const std::string& def) {
    return c.contains(key) ? text(c, key) : def;
}

std::vector<long> integer_list(const json& c, const std::string& key) {
    if (!c.contains(key) || !c[key].is_array())
        throw config_error("missing or non-array config field: " + key);
    std::vector<long> out;
    for (const auto& v : c[key]) {
        if (!v.is_number_integer())
            throw config_error("non-integer entry in config field: " + key);
        out.push_back(v.get<long>());
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

// Collects artifact paths and closes the run with a manifest.
struct RunDir {
    std::filesystem::path root;
    json config;
    std::string command;
    std::vector<std::string> artifacts;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    RunDir(const std::string& dir, std::string cmd, json cfg)
        : root(dir), config(std::move(cfg)), command(std::move(cmd)) {
        std::filesystem::create_directories(root);
    }

    std::string path(const std::string& name) {
        artifacts.push_back(name);
        return (root / name).string();
    }

    void finish() {
        artifacts.push_back("manifest.json");
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        json manifest{{"command", command},
                      {"config", config},
                      {"artifacts", artifacts},
                      {"wall_time_s", wall}};
        io::write_text((root / "manifest.json").string(), manifest.dump(2) + "\n");
    }
};

json probe_report_json(const ProbeReport& r) {
    return json{{"n_samples", r.n_samples},     {"ratio_max", r.ratio_max},
                {"ratio_mean", r.ratio_mean},   {"argmax_sample", r.argmax_sample},
                {"n_points", r.n_points},       {"n_time", r.n_time},
                {"n_degenerate", r.n_degenerate}};
}

void write_ratios_csv(const std::string& path, const std::vector<double>& ratios) {
    std::ostringstream out;
    out << "sample,ratio\n";
    for (size_t i = 0; i < ratios.size(); ++i)
        out << i << ',' << io::fmt(ratios[i]) << '\n';
    io::write_text(path, out.str());
}

EvolutionParams evolution_params(const json& c, int j) {
    EvolutionParams p;
    p.j = j;
    p.dt = num(c, "dt");
    if (!(p.dt > 0.0)) throw config_error("dt must be positive");
    p.t_end = num_or(c, "t_end", 1.0);
    p.dealias = c.value("dealias", true);
    p.nonlinearity = !c.value("linear_only", false);
    return p;
}

int cmd_simulate(RunDir& run, const json& c) {
    int j = static_cast<int>(integer(c, "j"));
    Grid grid(static_cast<int>(integer_or(c, "n_points", 256)), j);
    EvolutionParams p = evolution_params(c, j);
    RealField u0 = make_profile(text(c, "profile"), grid);

    long n_steps = std::max<long>(1, std::llround(p.t_end / p.dt));
    long record_every = integer_or(c, "record_every", std::max<long>(1, n_steps / 200));

    Trajectory traj = evolve(u0, p, record_every);
    for (const auto& w : traj.warnings) std::cerr << "warning: " << w << "\n";

    std::vector<double> s_list{0.0, 0.5, 1.0};
    if (c.contains("s_list")) {
        s_list.clear();
        for (const auto& v : c["s_list"]) s_list.push_back(v.get<double>());
    }
    auto records = record(traj, s_list);
    io::write_diagnostics_csv(run.path("diagnostics.csv"), records);
    io::write_diagnostics_jsonl(run.path("diagnostics.jsonl"), records);
    io::write_field_csv(run.path("final_state.csv"), traj.back());
    if (c.value("dump_trajectory", false)) {
        for (const auto& name : io::write_trajectory((run.root / "trajectory").string(), traj))
            run.artifacts.push_back("trajectory/" + name);
    }
    return 0;
}

int cmd_picard_check(RunDir& run, const json& c) {
    int j = static_cast<int>(integer(c, "j"));
    Grid grid(static_cast<int>(integer_or(c, "n_points", 128)), j);
    EvolutionParams p = evolution_params(c, j);
    double delta = num(c, "delta");
    int n_iter = static_cast<int>(integer_or(c, "n_iter", 8));
    double s = num_or(c, "s", 1.0);
    RealField u0 = make_profile(text(c, "profile"), grid);

    PicardResult pr = picard_iterate(u0, delta, n_iter, p, s);

    EvolutionParams pe = p;
    pe.t_end = delta;
    Trajectory ref = evolve(u0, pe, 1);
    double vs_evolve = 0.0;
    {
        // Both lattices share the spacing p.dt; compare state by state.
        size_t m = std::min(ref.size(), pr.final_iterate.size());
        for (size_t i = 0; i < m; ++i) {
            RealField diff(grid);
            for (int l = 0; l < grid.n_points; ++l)
                diff.data()[l] =
                    pr.final_iterate.states[i].data()[l] - ref.states[i].data()[l];
            vs_evolve = std::max(vs_evolve, sobolev_norm(diff, s));
        }
    }

    std::ostringstream csv;
    csv << "iteration,distance,ratio\n";
    for (size_t i = 0; i < pr.distances.size(); ++i) {
        csv << i + 1 << ',' << io::fmt(pr.distances[i]) << ',';
        csv << (i > 0 && pr.distances[i - 1] > 0.0
                    ? io::fmt(pr.distances[i] / pr.distances[i - 1])
                    : std::string("nan"));
        csv << '\n';
    }
    io::write_text(run.path("picard.csv"), csv.str());

    json summary{{"contraction_failed", pr.contraction_failed},
                 {"sup_distance_to_evolve", vs_evolve},
                 {"s", s},
                 {"delta", delta}};
    io::write_text(run.path("summary.json"), summary.dump(2) + "\n");
    if (pr.contraction_failed) {
        std::cerr << "picard-check: non-contraction (delta too large for this data)\n";
        return 1;
    }
    return 0;
}

int cmd_imethod_scan(RunDir& run, const json& c) {
    int j = static_cast<int>(integer(c, "j"));
    Grid grid(static_cast<int>(integer_or(c, "n_points", 128)), j);
    double s = num(c, "s");
    double delta = num(c, "delta");
    EvolutionParams p = evolution_params(c, j);
    p.t_end = delta;
    std::vector<long> n_list = integer_list(c, "N_list");
    std::vector<IMultiplier> ims;
    for (long n : n_list) ims.emplace_back(s, static_cast<int>(n));
    RealField u0 = make_profile(text(c, "profile"), grid);

    long n_steps = std::max<long>(1, std::llround(delta / p.dt));
    long record_every = std::max<long>(1, n_steps / 200);
    Trajectory traj = evolve(u0, p, record_every);

    std::vector<ScalingEntry> table(ims.size());
    std::vector<CommutatorTerms> terms(ims.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < ims.size(); ++i) {
        double inc = energy_increment(traj, ims[i]);
        table[i] = {ims[i].n_cutoff, inc, std::abs(inc), false};
        terms[i] = commutator_terms(traj, ims[i]);
    }
    ScalingReport report = fit_scaling(table);

    std::ostringstream scaling;
    scaling << "N,increment,abs_increment\n";
    for (const auto& e : report.table)
        scaling << e.n_cutoff << ',' << io::fmt(e.increment) << ','
                << io::fmt(e.abs_increment) << '\n';
    io::write_text(run.path("scaling.csv"), scaling.str());

    std::ostringstream comm;
    comm << "N,t1,t2,t3,sum,direct_increment,rel_gap\n";
    for (size_t i = 0; i < ims.size(); ++i) {
        double direct = report.table[i].increment;
        double sum = terms[i].sum();
        double scale = std::max(std::abs(direct), std::abs(sum));
        double gap = scale > 0.0 ? std::abs(direct - sum) / scale : 0.0;
        comm << ims[i].n_cutoff << ',' << io::fmt(terms[i].t1) << ',' << io::fmt(terms[i].t2)
             << ',' << io::fmt(terms[i].t3) << ',' << io::fmt(sum) << ',' << io::fmt(direct)
             << ',' << io::fmt(gap) << '\n';
    }
    io::write_text(run.path("commutators.csv"), comm.str());

    json excluded = json::array();
    for (const auto& e : report.table)
        if (e.excluded) excluded.push_back(e.n_cutoff);
    json summary{{"slope", report.slope},
                 {"intercept", report.intercept},
                 {"residual", report.residual},
                 {"degenerate", report.degenerate},
                 {"excluded", excluded}};
    io::write_text(run.path("summary.json"), summary.dump(2) + "\n");
    return 0;
}

int cmd_resonance_verify(RunDir& run, const json& c) {
    int j = static_cast<int>(integer(c, "j"));
    int k_max = static_cast<int>(integer(c, "k_max"));
    ResonanceScanReport r = equivalence_scan(j, k_max);
    json out{{"j", r.j},
             {"k_max", r.k_max},
             {"ratio_min", r.ratio_min},
             {"ratio_max", r.ratio_max},
             {"argmin", {r.argmin[0], r.argmin[1], r.argmin[2]}},
             {"argmax", {r.argmax[0], r.argmax[1], r.argmax[2]}},
             {"violations", r.violations}};
    io::write_text(run.path("report.json"), out.dump(2) + "\n");
    return 0;
}

int cmd_annulus_count(RunDir& run, const json& c) {
    int j = static_cast<int>(integer(c, "j"));
    long k = integer(c, "k");
    long k1_range = integer(c, "k1_range");
    std::vector<long> m_list = integer_list(c, "M_list");

    std::ostringstream csv;
    csv << "M,count\n";
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long n = 0;
    for (long m : m_list) {
        long count = annulus_count(k, j, m, k1_range);
        csv << m << ',' << count << '\n';
        if (count > 0) {
            double x = std::log(static_cast<double>(m));
            double y = std::log(static_cast<double>(count));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++n;
        }
    }
    io::write_text(run.path("counts.csv"), csv.str());
    double exponent = (n >= 2 && (n * sxx - sx * sx) > 0.0)
                          ? (n * sxy - sx * sy) / (n * sxx - sx * sx)
                          : 0.0;
    json summary{{"j", j}, {"k", k}, {"k1_range", k1_range}, {"fitted_exponent", exponent}};
    io::write_text(run.path("summary.json"), summary.dump(2) + "\n");
    return 0;
}

int cmd_l4_probe(RunDir& run, const json& c) {
    int j = static_cast<int>(integer(c, "j"));
    Grid grid(static_cast<int>(integer_or(c, "n_points", 64)), j);
    int n_time = static_cast<int>(integer_or(c, "n_time", 64));
    double t_window = num_or(c, "t_window", kTwoPi);
    long n_samples = integer(c, "n_samples");
    auto seed = static_cast<std::uint64_t>(integer_or(c, "seed", 1));

    std::vector<double> ratios;
    ProbeReport r = l4_probe(n_samples, grid, n_time, t_window, seed, true,
                             c.value("emit_ratios", false) ? &ratios : nullptr);
    io::write_text(run.path("report.json"), probe_report_json(r).dump(2) + "\n");
    if (!ratios.empty()) write_ratios_csv(run.path("ratios.csv"), ratios);
    return 0;
}

int cmd_bilinear_probe(RunDir& run, const json& c) {
    int j = static_cast<int>(integer(c, "j"));
    Grid grid(static_cast<int>(integer_or(c, "n_points", 64)), j);
    int n_time = static_cast<int>(integer_or(c, "n_time", 64));
    double t_window = num_or(c, "t_window", kTwoPi);
    long n_samples = integer(c, "n_samples");
    auto seed = static_cast<std::uint64_t>(integer_or(c, "seed", 1));
    double s = num(c, "s");
    std::string form_name = text(c, "form");
    BilinearForm form;
    if (form_name == "lemma31")
        form = BilinearForm::helmholtz_gradient;
    else if (form_name == "lemma32")
        form = BilinearForm::gradient_product;
    else
        throw config_error("form must be lemma31 or lemma32");

    std::vector<double> ratios;
    ProbeReport r = bilinear_probe(form, s, n_samples, grid, n_time, t_window, seed, true,
                                   c.value("emit_ratios", false) ? &ratios : nullptr);
    json out = probe_report_json(r);
    out["form"] = form_name;
    out["s"] = s;
    io::write_text(run.path("report.json"), out.dump(2) + "\n");
    if (!ratios.empty()) write_ratios_csv(run.path("ratios.csv"), ratios);
    return 0;
}

int cmd_growth_campaign(RunDir& run, const json& c) {
    int j = static_cast<int>(integer(c, "j"));
    Grid grid(static_cast<int>(integer_or(c, "n_points", 128)), j);
    double s = num(c, "s");
    EvolutionParams p = evolution_params(c, j);
    double t_end = p.t_end;
    RealField u0 = make_profile(text(c, "profile"), grid);
    long n_steps = std::max<long>(1, std::llround(t_end / p.dt));
    long record_every = integer_or(c, "record_every", std::max<long>(1, n_steps / 500));

    CampaignResult r = growth_campaign(u0, j, s, t_end, p, record_every);

    std::ostringstream csv;
    csv << "t,sup_hs\n";
    for (size_t i = 0; i < r.times.size(); ++i)
        csv << io::fmt(r.times[i]) << ',' << io::fmt(r.sup_hs[i]) << '\n';
    io::write_text(run.path("campaign.csv"), csv.str());

    json summary{{"j", r.law.j},
                 {"s", r.law.s},
                 {"epsilon", r.law.epsilon},
                 {"f_j", r.law.f_j},
                 {"exponent_T", r.law.exponent_T},
                 {"exponent_data", r.law.exponent_data},
                 {"measured_exponent", r.measured_exponent}};
    io::write_text(run.path("summary.json"), summary.dump(2) + "\n");
    return 0;
}

} // namespace

void init_threads() {
    if (const char* env = std::getenv("HSW_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
}

RealField make_profile(const std::string& spec, const Grid& grid) {
    auto parts = split(spec, ':');
    if (parts.empty()) throw config_error("empty initial-data profile");
    try {
        if (parts[0] == "single_mode") {
            if (parts.size() != 3)
                throw config_error("single_mode profile wants single_mode:<k>:<amplitude>");
            int k = std::stoi(parts[1]);
            double amp = std::stod(parts[2]);
            if (k < 1 || k > grid.n_points / 3)
                throw config_error("single_mode k must lie in [1, n_points/3]");
            RealField u(grid);
            u.set_coeff(k, amp / 2.0);
            u.set_coeff(-k, amp / 2.0);
            return u;
        }
        if (parts[0] == "broadband") {
            if (parts.size() != 4)
                throw config_error(
                    "broadband profile wants broadband:<decay>:<seed>:<amplitude>");
            double decay = std::stod(parts[1]);
            auto seed = static_cast<std::uint64_t>(std::stoull(parts[2]));
            double amp = std::stod(parts[3]);
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> phase(0.0, kTwoPi);
            RealField u(grid);
            for (int k = 1; k <= grid.n_points / 3; ++k) {
                double mag = std::exp(-decay * k);
                std::complex<double> z = 0.5 * mag *
                                         std::exp(std::complex<double>(0.0, phase(rng)));
                u.set_coeff(k, z);
                u.set_coeff(-k, std::conj(z));
            }
            double h1 = sobolev_norm(u, 1.0);
            if (h1 == 0.0) throw config_error("broadband profile degenerated to zero");
            for (auto& z : u.data()) z *= amp / h1;
            return u;
        }
        if (parts[0] == "file") {
            if (parts.size() != 2) throw config_error("file profile wants file:<path>");
            return io::read_field_csv(parts[1], grid);
        }
    } catch (const config_error&) {
        throw;
    } catch (const std::exception& e) {
        throw config_error("invalid profile `" + spec + "`: " + e.what());
    }
    throw config_error("unknown initial-data profile: " + parts[0]);
}

int run(const std::string& command, nlohmann::json config, const std::string& out_dir) {
    init_threads();
    try {
        RunDir run_dir(out_dir, command, config);
        int rc;
        if (command == "simulate")
            rc = cmd_simulate(run_dir, config);
        else if (command == "picard-check")
            rc = cmd_picard_check(run_dir, config);
        else if (command == "imethod-scan")
            rc = cmd_imethod_scan(run_dir, config);
        else if (command == "resonance-verify")
            rc = cmd_resonance_verify(run_dir, config);
        else if (command == "annulus-count")
            rc = cmd_annulus_count(run_dir, config);
        else if (command == "l4-probe")
            rc = cmd_l4_probe(run_dir, config);
        else if (command == "bilinear-probe")
            rc = cmd_bilinear_probe(run_dir, config);
        else if (command == "growth-campaign")
            rc = cmd_growth_campaign(run_dir, config);
        else
            throw config_error("unknown subcommand: " + command);
        run_dir.finish();
        return rc;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const blow_up_error& e) {
        std::cerr << "numerical failure: " << e.what() << " (t = " << e.time() << ")\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hsw::harness
