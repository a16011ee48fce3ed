#pragma once

#include <optional>
#include <vector>

#include "octupolar/config.hpp"
#include "octupolar/orientation.hpp"

namespace octupolar {

/// One chi = const section of the separatrix.
struct SeparatrixSection {
    double chi = 0.0;
    struct Sample {
        double rho = 0.0;
        double k_crit = 0.0;  // 10 points below, 14 above
        int on_count = 0;     // 8, 10 or 12 on the surface itself
        char branch = '?';    // '1' (S1), '2' (S2), 'c' (cusp)
    };
    std::vector<Sample> samples;
    std::optional<std::pair<double, double>> cusp;  // (rho*, k*) where S1 and S2 meet
};

/// Count-based bisection in K at each rho, with warm-started brackets and a
/// final polish by Newton on the bordered (degenerate critical point) system.
SeparatrixSection trace_section(double chi, const std::vector<double>& rho_grid,
                                const SolverConfig& cfg = {});

struct SeparatrixSurface {
    std::vector<SeparatrixSection> sections;
    std::vector<std::array<double, 3>> cusp_line;      // (chi, rho, k), count 8
    std::vector<std::array<double, 3>> boundary_line;  // (chi, rho, k), count 10
};

SeparatrixSurface trace_surface(const std::vector<double>& chi_grid,
                                const std::vector<double>& rho_grid,
                                const SolverConfig& cfg = {});

/// Critical point count at (k, rho, chi) by the reduced-grid multistart
/// counter used for continuation (exposed for tests).
int count_critical_points(const OrientedParams& p, const SolverConfig& cfg = {});

}  // namespace octupolar
