#pragma once

#include "octupolar/strata.hpp"
#include "octupolar/tensor.hpp"

namespace octupolar {

struct ClassifyOptions {
    double degeneracy_rel_tol = 1e-8;
    double winding_radius = 1e-3;
    int winding_samples = 32;
};

/// Morse data for a critical point at unit vector v: lambda = Phi(v), the
/// angular-chart Hessian eigenvalues (Cartesian chart at the poles), the type,
/// and the Poincare-Hopf index (winding number when the Hessian is
/// degenerate, +/-1 otherwise).
CriticalPoint classify_point(const OctupolarTensor& t, const Vec3& v,
                             const ClassifyOptions& opt = {});

}  // namespace octupolar
