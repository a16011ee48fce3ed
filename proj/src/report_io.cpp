#include "octupolar/report_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace octupolar {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void print_spectrum_table(std::ostream& os, const SpectrumReport& rep, bool degrees) {
    const double f = degrees ? 180.0 / kPi : 1.0;
    os << "# params: K=" << format_double(rep.params.k) << " rho=" << format_double(rep.params.rho)
       << " chi=" << format_double(rep.params.chi * f) << (degrees ? " deg" : " rad") << "\n";
    os << "# stratum: " << rep.stratum.name() << "  phase: " << rep.phase << "\n";
    os << std::left << std::setw(4) << "n" << std::right << std::setw(14) << "theta1"
       << std::setw(14) << "theta2" << std::setw(14) << "lambda" << std::setw(14) << "hess_1"
       << std::setw(14) << "hess_2" << "  " << std::left << std::setw(20) << "type" << std::right
       << std::setw(6) << "index" << "\n";
    int n = 1;
    os << std::setprecision(8);
    for (const CriticalPoint& cp : rep.points) {
        os << std::left << std::setw(4) << n++ << std::right << std::setw(14)
           << cp.location.theta1 * f << std::setw(14) << cp.location.theta2 * f << std::setw(14)
           << cp.lambda << std::setw(14) << cp.hessian_eigs[0] << std::setw(14)
           << cp.hessian_eigs[1] << "  " << std::left << std::setw(20) << to_string(cp.type)
           << std::right << std::setw(6) << cp.index << "\n";
    }
    for (const CriticalCircle& c : rep.circles) {
        os << "circle: theta1=" << c.theta1 * f << " value=" << c.value
           << " transverse_hessian=" << c.hessian_eig << "\n";
    }
    os << "# n_max=" << rep.n_max << " n_min=" << rep.n_min << " n_saddle=" << rep.n_saddle
       << " index_sum=" << rep.index_sum
       << " absolute_max_at_pole=" << (rep.absolute_max_at_pole ? "yes" : "no") << "\n";
}

namespace {

nlohmann::json point_json(const CriticalPoint& cp) {
    return {
        {"theta1", cp.location.theta1}, {"theta2", cp.location.theta2}, {"lambda", cp.lambda},
        {"hessian_eigs", {cp.hessian_eigs[0], cp.hessian_eigs[1]}},
        {"type", to_string(cp.type)},   {"index", cp.index},
    };
}

}  // namespace

std::string spectrum_to_json(const SpectrumReport& rep) {
    nlohmann::json j;
    j["schema"] = "octupolar.spectrum/1";
    j["params"] = {{"k", rep.params.k}, {"rho", rep.params.rho}, {"chi", rep.params.chi}};
    j["stratum"] = rep.stratum.name();
    j["phase"] = rep.phase;
    j["points"] = nlohmann::json::array();
    for (const CriticalPoint& cp : rep.points) j["points"].push_back(point_json(cp));
    j["circles"] = nlohmann::json::array();
    for (const CriticalCircle& c : rep.circles)
        j["circles"].push_back(
            {{"theta1", c.theta1}, {"value", c.value}, {"transverse_hessian", c.hessian_eig}});
    j["residuals"] = rep.residuals;
    j["n_max"] = rep.n_max;
    j["n_min"] = rep.n_min;
    j["n_saddle"] = rep.n_saddle;
    j["index_sum"] = rep.index_sum;
    j["absolute_max_at_pole"] = rep.absolute_max_at_pole;
    return j.dump(2) + "\n";
}

std::string surface_to_json(const SeparatrixSurface& surf) {
    nlohmann::json j;
    j["schema"] = "octupolar.separatrix/1";
    j["sections"] = nlohmann::json::array();
    for (const SeparatrixSection& s : surf.sections) {
        nlohmann::json sec;
        sec["chi"] = s.chi;
        sec["samples"] = nlohmann::json::array();
        for (const auto& sm : s.samples)
            sec["samples"].push_back({{"rho", sm.rho},
                                      {"k_crit", sm.k_crit},
                                      {"on_count", sm.on_count},
                                      {"branch", std::string(1, sm.branch)}});
        if (s.cusp) sec["cusp"] = {{"rho", s.cusp->first}, {"k", s.cusp->second}};
        j["sections"].push_back(sec);
    }
    j["cusp_line"] = nlohmann::json::array();
    for (const auto& p : surf.cusp_line)
        j["cusp_line"].push_back({{"chi", p[0]}, {"rho", p[1]}, {"k", p[2]}});
    j["boundary_line"] = nlohmann::json::array();
    for (const auto& p : surf.boundary_line)
        j["boundary_line"].push_back({{"chi", p[0]}, {"rho", p[1]}, {"k", p[2]}});
    return j.dump(2) + "\n";
}

std::string section_to_csv(const SeparatrixSection& sec) {
    std::string out = "chi,rho,k_s1,k_s2_inner,k_s2_outer\r\n";
    for (const auto& s : sec.samples) {
        out += format_double(sec.chi);
        out += ',';
        out += format_double(s.rho);
        // the 12-count fold is codimension one: its inner and outer edges
        // coincide at the bisection resolution, so S2 rows carry the same
        // value in both columns
        if (s.branch == '2' || s.branch == 'c') {
            out += ",," + format_double(s.k_crit) + "," + format_double(s.k_crit);
        } else {
            out += "," + format_double(s.k_crit) + ",,";
        }
        out += "\r\n";
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace octupolar
