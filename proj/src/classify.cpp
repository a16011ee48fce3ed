#include "octupolar/classify.hpp"

#include <cmath>

#include "octupolar/index.hpp"

namespace octupolar {

CriticalPoint classify_point(const OctupolarTensor& t, const Vec3& v, const ClassifyOptions& opt) {
    CriticalPoint cp;
    cp.location = SphericalPoint::from_cartesian(v);
    cp.lambda = potential(t, v);

    Sym2 h;
    if (std::abs(cp.location.theta1) > kPi / 2.0 - 1e-9) {
        h = pole_hessian(t, cp.location.theta1 > 0.0);
    } else if (std::abs(cp.location.theta1) > kPi / 2.0 - 1e-3) {
        const auto [t1, t2] = tangent_basis(v);
        h = sphere_hessian_in_basis(t, v, t1, t2);
    } else {
        h = spherical_hessian(t, cp.location);
    }
    const auto eig = h.eigenvalues();
    cp.hessian_eigs = eig;

    const double big = std::max(std::abs(eig[0]), std::abs(eig[1]));
    const double small = std::min(std::abs(eig[0]), std::abs(eig[1]));
    const double scale = std::max(1.0, t.max_abs_param());
    const bool degenerate = small <= opt.degeneracy_rel_tol * std::max(big, 1e-6 * scale);

    if (!degenerate) {
        if (eig[1] < 0.0) {
            cp.type = MorseType::Max;
            cp.index = 1;
        } else if (eig[0] > 0.0) {
            cp.type = MorseType::Min;
            cp.index = 1;
        } else {
            cp.type = MorseType::Saddle;
            cp.index = -1;
        }
        return cp;
    }

    cp.index = poincare_hopf_index(t, cp.location, opt.winding_radius, opt.winding_samples);
    cp.type = (cp.index == 1) ? MorseType::DegenerateExtremum : MorseType::DegenerateSaddle;
    return cp;
}

}  // namespace octupolar
