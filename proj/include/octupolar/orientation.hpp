#pragma once

#include "octupolar/math.hpp"
#include "octupolar/tensor.hpp"

namespace octupolar {

/// Reduced parameter triple on the admissible cylinder: alpha0 = (rho/2) cos chi,
/// beta3 = -1/2 + (rho/2) sin chi, alpha2 = k, alpha3 = 1, alpha1 = beta1 = beta2 = 0.
struct OrientedParams {
    double k = 0.0;
    double rho = 0.0;
    double chi = 0.0;
};

/// Build the oriented tensor from cylinder coordinates.  Negative k is folded
/// to -k (the theta2-shift of that symmetry is absorbed).  Throws
/// OutsideCylinder for rho outside [0, 2].
OctupolarTensor from_cylinder(double k, double rho, double chi);
inline OctupolarTensor from_cylinder(const OrientedParams& p) {
    return from_cylinder(p.k, p.rho, p.chi);
}

/// Read (k, rho, chi) back from a tensor already in oriented normalized form.
OrientedParams params_of(const OctupolarTensor& t);

/// Closed-form Hessian of the constrained potential at the North Pole,
/// 3 [[rho sin chi - 2, rho cos chi], [rho cos chi, -rho sin chi - 2]];
/// eigenvalues -3(2 +/- rho).
Sym2 north_pole_hessian(const OrientedParams& p);

/// Fold into the fundamental domain k >= 0, chi in [-pi/2, -pi/6].
OrientedParams canonical_form(const OrientedParams& p);

struct OrientResult {
    OrientedParams params;
    Mat3 rotation;  // orthogonal; t = scale * transform(from_cylinder(params), rotation)
    double scale = 1.0;
};

/// Rotate a global maximum of Phi to the North Pole, fix the in-plane frame by
/// Phi(1,0,0) = 0, and scale the orienting eigenvalue to 1.  Throws ZeroTensor.
OrientResult orient(const OctupolarTensor& t);

/// scale * transform(from_cylinder(params), rotation); inverse of orient().
OctupolarTensor reconstruct(const OrientResult& r);

/// Multiply all 7 components by s.
OctupolarTensor scaled(const OctupolarTensor& t, double s);

}  // namespace octupolar
