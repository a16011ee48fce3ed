#pragma once

#include "octupolar/math.hpp"
#include "octupolar/tensor.hpp"

namespace octupolar {

struct NewtonResult {
    Vec3 v;
    bool converged = false;
    double grad_norm = 0.0;
    int iters = 0;
};

/// Damped Newton iteration for critical points of Phi restricted to the unit
/// sphere, working intrinsically (chart-free, so the poles need no special
/// handling).  Backtracks on |grad|^2 with factor `damping`; falls back to a
/// Levenberg-regularized step when the tangent Hessian is near singular.
NewtonResult refine_critical(const OctupolarTensor& t, Vec3 v, int max_iters = 40,
                             double grad_tol = 1e-12, double damping = 0.5);

}  // namespace octupolar
