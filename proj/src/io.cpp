#include "hsw/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hsw::io {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

void write_field_csv(const std::string& path, const RealField& field) {
    const Grid& g = field.grid();
    std::ostringstream out;
    out << "k,re,im\n";
    for (int k = -g.max_mode() + 1; k <= g.max_mode(); ++k) {
        auto c = field.coeff(k);
        out << k << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << '\n';
    }
    write_text(path, out.str());
}

RealField read_field_csv(const std::string& path, const Grid& grid) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field csv: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("k,re,im", 0) != 0)
        throw std::runtime_error("field csv missing `k,re,im` header: " + path);
    RealField field(grid);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tok;
        std::getline(row, tok, ',');
        int k = std::stoi(tok);
        std::getline(row, tok, ',');
        double re = std::stod(tok);
        std::getline(row, tok, ',');
        double im = std::stod(tok);
        if (k <= -grid.max_mode() || k > grid.max_mode())
            throw std::runtime_error("field csv mode out of range: " + path);
        field.set_coeff(k, {re, im});
    }
    return field;
}

std::vector<std::string> write_trajectory(const std::string& dir, const Trajectory& traj) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    std::ostringstream times;
    times << "index,time\n";
    for (size_t i = 0; i < traj.size(); ++i) {
        std::string name = "t_" + std::to_string(i) + ".csv";
        write_field_csv(dir + "/" + name, traj.states[i]);
        written.push_back(name);
        times << i << ',' << fmt(traj.times[i]) << '\n';
    }
    write_text(dir + "/times.csv", times.str());
    written.push_back("times.csv");
    return written;
}

void write_diagnostics_csv(const std::string& path,
                           const std::vector<DiagnosticsRecord>& records) {
    std::ostringstream out;
    out << "time,mean,h1_energy";
    if (!records.empty())
        for (const auto& [s, _] : records.front().hs_norms) out << ",hs_" << fmt(s);
    out << '\n';
    for (const auto& r : records) {
        out << fmt(r.time) << ',' << fmt(r.mean) << ',' << fmt(r.h1_energy);
        for (const auto& [_, v] : r.hs_norms) out << ',' << fmt(v);
        out << '\n';
    }
    write_text(path, out.str());
}

void write_diagnostics_jsonl(const std::string& path,
                             const std::vector<DiagnosticsRecord>& records) {
    std::ostringstream out;
    for (const auto& r : records) {
        nlohmann::json obj{{"time", r.time}, {"mean", r.mean}, {"h1_energy", r.h1_energy}};
        nlohmann::json hs = nlohmann::json::object();
        for (const auto& [s, v] : r.hs_norms) hs[fmt(s)] = v;
        obj["hs_norms"] = hs;
        if (r.i_energy) obj["i_energy"] = *r.i_energy;
        out << obj.dump() << '\n';
    }
    write_text(path, out.str());
}

} // namespace hsw::io
