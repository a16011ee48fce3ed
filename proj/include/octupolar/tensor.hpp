#pragma once

#include <array>

#include "octupolar/math.hpp"

namespace octupolar {

/// Third-order, fully symmetric, completely traceless tensor in 3D.
/// The seven free components parametrize the whole family:
///   A123 = alpha0,
///   A111 = alpha1, A222 = alpha2, A333 = alpha3,
///   A122 = beta1,  A233 = beta2,  A311 = beta3,
/// and the vanishing partial traces fix
///   A133 = -(alpha1+beta1), A211 = -(alpha2+beta2), A322 = -(alpha3+beta3).
struct OctupolarTensor {
    double alpha0 = 0.0;
    double alpha1 = 0.0, alpha2 = 0.0, alpha3 = 0.0;
    double beta1 = 0.0, beta2 = 0.0, beta3 = 0.0;

    double max_abs_param() const;
    bool is_zero(double tol = 1e-14) const { return max_abs_param() < tol; }
};

/// Latitude/longitude chart of the unit sphere:
/// (x, y, z) = (cos t1 cos t2, cos t1 sin t2, sin t1).
struct SphericalPoint {
    double theta1 = 0.0;  // latitude in [-pi/2, pi/2]
    double theta2 = 0.0;  // longitude in [-pi, pi)

    Vec3 cartesian() const {
        const double c = std::cos(theta1);
        return {c * std::cos(theta2), c * std::sin(theta2), std::sin(theta1)};
    }
    static SphericalPoint from_cartesian(const Vec3& v);
};

using Full3 = std::array<std::array<std::array<double, 3>, 3>, 3>;

/// Materialize all 27 entries from the 7 free components.
Full3 assemble_full(const OctupolarTensor& t);

/// Naive triple contraction of a full array with p (x) p (x) p.  Kept as an
/// independent evaluation route for verification.
double contract_full(const Full3& a, const Vec3& p);

/// Cubic form Phi(p) = A_ijk p_i p_j p_k, expanded in the 7 components.
double potential(const OctupolarTensor& t, const Vec3& p);

/// Quadratic map A(p, p), i.e. the left-hand side of the eigenpair system.
Vec3 quadratic_map(const OctupolarTensor& t, const Vec3& p);

/// grad Phi = 3 A(p, p).
Vec3 potential_gradient(const OctupolarTensor& t, const Vec3& p);

/// Matrix (A.p)_{ij} = A_ijk p_k; grad^2 Phi = 6 (A.p).
Mat3 tensor_dot(const OctupolarTensor& t, const Vec3& p);

/// Psi = Phi restricted to the unit sphere in the angular chart.
double spherical_potential(const OctupolarTensor& t, const SphericalPoint& sp);

/// (dPsi/dtheta1, dPsi/dtheta2).
std::array<double, 2> spherical_gradient(const OctupolarTensor& t, const SphericalPoint& sp);

/// Angular-chart Hessian of Psi.  Throws PolarChart within 1e-6 of the poles,
/// where the chart degenerates; use pole_hessian there.
Sym2 spherical_hessian(const OctupolarTensor& t, const SphericalPoint& sp);

/// Hessian of Phi in the chart z = +/- sqrt(1 - x^2 - y^2), evaluated at the
/// pole itself.  Equals the intrinsic sphere Hessian in the (x, y) basis.
Sym2 pole_hessian(const OctupolarTensor& t, bool north);

/// Intrinsic sphere Hessian at unit v expressed in the tangent basis (t1, t2):
/// H_ij = 6 t_i.(A.v).t_j - 3 Phi(v) delta_ij.
Sym2 sphere_hessian_in_basis(const OctupolarTensor& t, const Vec3& v, const Vec3& t1,
                             const Vec3& t2);

/// Tangential gradient of Phi restricted to the sphere: 3(A(v,v) - Phi(v) v).
Vec3 sphere_gradient(const OctupolarTensor& t, const Vec3& v);

/// A(p, p) - lambda p.  Throws NotUnitVector when | |p| - 1 | > unit_tol.
Vec3 eigen_residual(const OctupolarTensor& t, const Vec3& p, double lambda,
                    double unit_tol = 1e-10);

/// Conjugation by an orthogonal matrix: A'_{ijk} = Q_ip Q_jq Q_kr A_pqr,
/// so that Phi'(x) = Phi(Q^T x).
OctupolarTensor transform(const OctupolarTensor& t, const Mat3& q);

/// Read the 7 components back from a full array.
OctupolarTensor components_from_full(const Full3& a);

}  // namespace octupolar
