#pragma once

#include <array>
#include <string>
#include <vector>

#include "octupolar/orientation.hpp"
#include "octupolar/tensor.hpp"

namespace octupolar {

enum class MorseType {
    Max,
    Min,
    Saddle,
    DegenerateSaddle,
    DegenerateExtremum,
    CircleDegenerate,
};

std::string to_string(MorseType m);

struct CriticalPoint {
    SphericalPoint location;
    double lambda = 0.0;                       // eigenvalue = Psi at the location
    std::array<double, 2> hessian_eigs{0, 0};  // ascending
    MorseType type = MorseType::Saddle;
    int index = 0;  // Poincare-Hopf
};

/// A full circle of degenerate critical points (D-infinity-h only).
struct CriticalCircle {
    double theta1 = 0.0;
    double value = 0.0;        // Psi on the circle
    double hessian_eig = 0.0;  // nontrivial (transverse) eigenvalue
};

enum class Stratum {
    Bulk,
    Center,
    Disk,
    Axis,
    Tetrahedral,
    PlaneP0,
    PlanePPlus,
    PlanePMinus,
};

struct StratumLabel {
    Stratum kind = Stratum::Bulk;
    std::string name() const;
    bool is_reflection_plane() const {
        return kind == Stratum::PlaneP0 || kind == Stratum::PlanePPlus ||
               kind == Stratum::PlanePMinus;
    }
};

/// Most specific stratum within tol.  chi is matched as given (mod 2 pi); k is
/// folded through |k|.
StratumLabel classify_stratum(const OrientedParams& p, double tol = 1e-9);

/// The 14 critical points shared by every tensor with rho = 0, |k| = 1/sqrt(2).
std::vector<CriticalPoint> tetrahedral_spectrum();

/// D-infinity-h stratum: the two poles plus two critical circles.
std::pair<std::vector<CriticalPoint>, std::vector<CriticalCircle>> center_spectrum();

/// D3h stratum (rho = 0, k > 0): 14 points in closed form.
std::vector<CriticalPoint> d3h_spectrum(double k);

// Closed-form D3h quantities (latitudes and potential levels of the
// non-polar families).
double d3h_tau_minus(double k);
double d3h_tau_plus(double k);
double d3h_zeta_minus(double k);
double d3h_zeta_plus(double k);

/// D2h stratum (k = 0, 0 < rho <= 2).  Coincident points at the rho = 1
/// bifurcation (and at rho = 2) are merged.
std::vector<CriticalPoint> d2h_spectrum(double rho, double chi);

/// Reflection-plane stratum chi = sign * pi/2.  sign is +1 or -1.
std::vector<CriticalPoint> reflection_plane_spectrum(double k, double rho, int sign);

/// Section of the separatrix with the plane chi = +pi/2 (and its rotations).
double curve_f(double rho);
/// Section with chi = -pi/2; continuous, kinked at rho = 1.
double curve_g(double rho);

}  // namespace octupolar
