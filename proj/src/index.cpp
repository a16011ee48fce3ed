#include "octupolar/index.hpp"

#include <cmath>

#include "octupolar/errors.hpp"

namespace octupolar {

namespace {

// Winding of the angular-chart gradient field around (t1c, t2c).  The chart
// distortion does not affect the (integer) degree as long as the loop stays
// away from the poles.
double winding_turns(const OctupolarTensor& t, double t1c, double t2c, double radius,
                     int samples, double floor_tol) {
    double total = 0.0;
    double prev = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double phi = 2.0 * kPi * i / samples;
        const SphericalPoint sp{t1c + radius * std::cos(phi), t2c + radius * std::sin(phi)};
        const auto g = spherical_gradient(t, sp);
        const double gn = std::hypot(g[0], g[1]);
        if (gn < floor_tol)
            throw LoopHitsSingularity("poincare_hopf_index: gradient vanishes on the loop");
        const double ang = std::atan2(g[1], g[0]);
        if (i > 0) {
            double d = ang - prev;
            while (d > kPi) d -= 2.0 * kPi;
            while (d < -kPi) d += 2.0 * kPi;
            total += d;
        }
        prev = ang;
    }
    return total / (2.0 * kPi);
}

}  // namespace

int poincare_hopf_index(const OctupolarTensor& t, const SphericalPoint& location, double radius,
                        int samples) {
    const double scale = std::max(1.0, t.max_abs_param());
    const Vec3 v0 = location.cartesian();
    if (norm(sphere_gradient(t, v0)) > 1e-8 * scale)
        throw NotCritical("poincare_hopf_index: location is not a critical point");

    // Near the poles rotate the point onto the equator first; the index is a
    // diffeomorphism invariant.
    OctupolarTensor tt = t;
    double t1c = location.theta1, t2c = location.theta2;
    if (std::abs(location.theta1) > 1.2) {
        tt = transform(t, rotation_taking(v0, {1, 0, 0}));
        t1c = 0.0;
        t2c = 0.0;
    }

    double r = radius;
    int n = samples;
    for (int attempt = 0; attempt < 4; ++attempt) {
        const double turns = winding_turns(tt, t1c, t2c, r, n, 1e-12 * scale);
        const double rounded = std::round(turns);
        if (std::abs(turns - rounded) < 0.2) return static_cast<int>(rounded);
        n *= 2;
        r *= 0.5;
    }
    throw NonConvergence("poincare_hopf_index: winding number did not stabilize");
}

}  // namespace octupolar
