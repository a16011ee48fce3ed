#pragma once

#include <string>
#include <vector>

#include "octupolar/config.hpp"
#include "octupolar/orientation.hpp"
#include "octupolar/strata.hpp"

namespace octupolar {

struct SpectrumReport {
    OrientedParams params;
    StratumLabel stratum;
    std::vector<CriticalPoint> points;    // sorted by (theta1, theta2)
    std::vector<CriticalCircle> circles;  // D-infinity-h only
    std::vector<double> residuals;        // |A(v,v) - lambda v| per point
    int n_max = 0;
    int n_min = 0;
    int n_saddle = 0;
    int index_sum = 0;  // isolated points only
    std::string phase;  // stratum name, or B3/B4 in the bulk
    bool absolute_max_at_pole = false;
};

/// Find and classify all real critical points of Psi: multi-start damped
/// Newton from a lat/lon seed grid plus closed-form stratum seeds.
SpectrumReport solve_spectrum(const OrientedParams& p, const SolverConfig& cfg = {});

/// Independent ground-truth: dense-grid candidate detection with
/// derivative-free pattern-search refinement and finite-difference
/// classification.  Evaluates Psi only through the naive 27-term contraction.
SpectrumReport oracle_spectrum(const OrientedParams& p, int n_lat = 256, int n_lon = 512);

/// Local cubic expansion of Psi at a degenerate critical point:
/// Psi = value + a20 u^2 + a11 u w + a02 w^2 + a30 u^3 + a21 u^2 w
///       + a12 u w^2 + a03 w^3 + O(4),  u = theta1 - theta1*, w = theta2 - theta2*.
struct CubicExpansion {
    double value = 0.0;
    std::array<double, 2> gradient{0, 0};
    double a20 = 0, a11 = 0, a02 = 0;
    double a30 = 0, a21 = 0, a12 = 0, a03 = 0;
};

/// Throws NotCritical / NotDegenerate when the point does not qualify.
CubicExpansion monkey_saddle_check(const OctupolarTensor& t, const SphericalPoint& location);

/// Counts, index sum, phase label and flags from a classified point set.
void finalize_report(SpectrumReport& rep, const OctupolarTensor& t);

/// Cell-centered lat/lon seed grid plus the two poles.
std::vector<Vec3> make_seed_grid(int nlat, int nlon);

/// Multi-start Newton with dedup and antipodal closure; the raw point-finding
/// stage of solve_spectrum, shared with the separatrix continuation.
std::vector<Vec3> find_critical_points(const OctupolarTensor& t, const std::vector<Vec3>& seeds,
                                       const SolverConfig& cfg, int* failures = nullptr);

}  // namespace octupolar
