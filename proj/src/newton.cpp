#include "octupolar/newton.hpp"

#include <cmath>

namespace octupolar {

NewtonResult refine_critical(const OctupolarTensor& t, Vec3 v, int max_iters, double grad_tol,
                             double damping) {
    v = normalized(v);
    NewtonResult res;
    double gn = norm(sphere_gradient(t, v));
    for (int it = 0; it < max_iters; ++it) {
        if (gn < grad_tol) {
            res.v = v;
            res.converged = true;
            res.grad_norm = gn;
            res.iters = it;
            return res;
        }
        const auto [t1, t2] = tangent_basis(v);
        const Vec3 g3 = sphere_gradient(t, v);
        const double g1 = dot(g3, t1), g2 = dot(g3, t2);
        Sym2 h = sphere_hessian_in_basis(t, v, t1, t2);
        double det = h.det();
        const double scale = std::max({std::abs(h.a), std::abs(h.c), std::abs(h.b), 1e-30});
        if (std::abs(det) < 1e-10 * scale * scale) {
            // Levenberg regularization near degenerate points
            const double mu = 1e-6 * scale + 1e-12;
            h.a += (h.a >= 0 ? mu : -mu);
            h.c += (h.c >= 0 ? mu : -mu);
            det = h.det();
            if (std::abs(det) < 1e-300) det = 1e-300;
        }
        double d1 = -(h.c * g1 - h.b * g2) / det;
        double d2 = -(-h.b * g1 + h.a * g2) / det;
        // clip absurd steps
        const double dn = std::hypot(d1, d2);
        if (dn > 0.5) {
            d1 *= 0.5 / dn;
            d2 *= 0.5 / dn;
        }
        double step = 1.0;
        Vec3 vn = v;
        double gnn = gn;
        for (int bt = 0; bt < 30; ++bt) {
            vn = normalized(v + (step * d1) * t1 + (step * d2) * t2);
            gnn = norm(sphere_gradient(t, vn));
            if (gnn < gn || gnn < grad_tol) break;
            step *= damping;
        }
        if (gnn >= gn && gn < 1e3 * grad_tol) break;  // stagnated at near-converged point
        v = vn;
        gn = gnn;
        res.iters = it + 1;
    }
    res.v = v;
    res.grad_norm = gn;
    res.converged = gn < grad_tol;
    return res;
}

}  // namespace octupolar
