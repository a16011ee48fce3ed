#include "octupolar/config.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace octupolar {

SolverConfig SolverConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    SolverConfig cfg;
    std::map<std::string, std::function<void(const std::string&)>> setters = {
        {"seed_lat", [&](const std::string& v) { cfg.seed_lat = std::stoi(v); }},
        {"seed_lon", [&](const std::string& v) { cfg.seed_lon = std::stoi(v); }},
        {"max_iters", [&](const std::string& v) { cfg.max_iters = std::stoi(v); }},
        {"grad_tol", [&](const std::string& v) { cfg.grad_tol = std::stod(v); }},
        {"damping", [&](const std::string& v) { cfg.damping = std::stod(v); }},
        {"dedup_tol", [&](const std::string& v) { cfg.dedup_tol = std::stod(v); }},
        {"degeneracy_rel_tol", [&](const std::string& v) { cfg.degeneracy_rel_tol = std::stod(v); }},
        {"winding_radius", [&](const std::string& v) { cfg.winding_radius = std::stod(v); }},
        {"winding_samples", [&](const std::string& v) { cfg.winding_samples = std::stoi(v); }},
        {"unit_tol", [&](const std::string& v) { cfg.unit_tol = std::stod(v); }},
        {"stratum_tol", [&](const std::string& v) { cfg.stratum_tol = std::stod(v); }},
        {"cluster_tol", [&](const std::string& v) { cfg.cluster_tol = std::stod(v); }},
        {"oracle_lat", [&](const std::string& v) { cfg.oracle_lat = std::stoi(v); }},
        {"oracle_lon", [&](const std::string& v) { cfg.oracle_lon = std::stoi(v); }},
        {"bisect_tol", [&](const std::string& v) { cfg.bisect_tol = std::stod(v); }},
        {"sep_seed_lat", [&](const std::string& v) { cfg.sep_seed_lat = std::stoi(v); }},
        {"sep_seed_lon", [&](const std::string& v) { cfg.sep_seed_lon = std::stoi(v); }},
        {"k_upper", [&](const std::string& v) { cfg.k_upper = std::stod(v); }},
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string key, value;
        std::istringstream ls(line);
        if (!std::getline(ls, key, '=')) continue;
        std::getline(ls, value);
        auto trim = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        if (key.empty()) continue;
        const auto it = setters.find(key);
        if (it == setters.end())
            throw std::runtime_error("unknown config key '" + key + "' at line " +
                                     std::to_string(lineno));
        it->second(value);
    }
    return cfg;
}

SolverConfig SolverConfig::resolve(const std::string& explicit_path) {
    if (!explicit_path.empty()) return load(explicit_path);
    if (const char* env = std::getenv("OCTUPOLAR_CONFIG"); env && *env) return load(env);
    return {};
}

}  // namespace octupolar
