#pragma once

#include <string>

namespace octupolar {

/// Tunables for the numeric machinery.  Defaults are the documented contract
/// values; a simple key=value file can override any of them.
struct SolverConfig {
    int seed_lat = 64;
    int seed_lon = 128;
    int max_iters = 40;
    double grad_tol = 1e-12;
    double damping = 0.5;
    double dedup_tol = 1e-6;
    double degeneracy_rel_tol = 1e-8;
    double winding_radius = 1e-3;
    int winding_samples = 32;
    double unit_tol = 1e-10;
    double stratum_tol = 1e-9;
    double cluster_tol = 3e-3;  // coincidence clustering on bifurcation loci
    int oracle_lat = 256;
    int oracle_lon = 512;
    // separatrix continuation
    double bisect_tol = 1e-6;
    int sep_seed_lat = 32;
    int sep_seed_lon = 64;
    double k_upper = 1.25;

    /// Parse a key=value file ('#' starts a comment).  Unknown keys are an error.
    static SolverConfig load(const std::string& path);

    /// Resolve the effective config: explicit path, else OCTUPOLAR_CONFIG env
    /// var, else defaults.
    static SolverConfig resolve(const std::string& explicit_path);
};

}  // namespace octupolar
