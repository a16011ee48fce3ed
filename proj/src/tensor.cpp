#include "octupolar/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "octupolar/errors.hpp"

namespace octupolar {

double OctupolarTensor::max_abs_param() const {
    return std::max({std::abs(alpha0), std::abs(alpha1), std::abs(alpha2), std::abs(alpha3),
                     std::abs(beta1), std::abs(beta2), std::abs(beta3)});
}

SphericalPoint SphericalPoint::from_cartesian(const Vec3& v) {
    SphericalPoint sp;
    sp.theta1 = safe_asin(v.z);
    const double c = std::hypot(v.x, v.y);
    sp.theta2 = (c < 1e-13) ? 0.0 : std::atan2(v.y, v.x);
    return sp;
}

Full3 assemble_full(const OctupolarTensor& t) {
    Full3 a{};
    auto set = [&a](int i, int j, int k, double v) {
        a[i][j][k] = a[i][k][j] = a[j][i][k] = a[j][k][i] = a[k][i][j] = a[k][j][i] = v;
    };
    set(0, 1, 2, t.alpha0);
    set(0, 0, 0, t.alpha1);
    set(1, 1, 1, t.alpha2);
    set(2, 2, 2, t.alpha3);
    set(0, 1, 1, t.beta1);
    set(1, 2, 2, t.beta2);
    set(2, 0, 0, t.beta3);
    set(0, 2, 2, -(t.alpha1 + t.beta1));
    set(1, 0, 0, -(t.alpha2 + t.beta2));
    set(2, 1, 1, -(t.alpha3 + t.beta3));
    return a;
}

OctupolarTensor components_from_full(const Full3& a) {
    OctupolarTensor t;
    t.alpha0 = a[0][1][2];
    t.alpha1 = a[0][0][0];
    t.alpha2 = a[1][1][1];
    t.alpha3 = a[2][2][2];
    t.beta1 = a[0][1][1];
    t.beta2 = a[1][2][2];
    t.beta3 = a[2][0][0];
    return t;
}

double contract_full(const Full3& a, const Vec3& p) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s += a[i][j][k] * p[i] * p[j] * p[k];
    return s;
}

double potential(const OctupolarTensor& t, const Vec3& p) {
    const double x = p.x, y = p.y, z = p.z;
    return 6.0 * t.alpha0 * x * y * z + t.alpha1 * x * (x * x - 3.0 * z * z) +
           t.alpha2 * y * (y * y - 3.0 * x * x) + t.alpha3 * z * (z * z - 3.0 * y * y) +
           3.0 * (t.beta1 * x * (y * y - z * z) + t.beta2 * y * (z * z - x * x) +
                  t.beta3 * z * (x * x - y * y));
}

Vec3 quadratic_map(const OctupolarTensor& t, const Vec3& p) {
    const double x1 = p.x, x2 = p.y, x3 = p.z;
    Vec3 r;
    r.x = 2.0 * t.alpha0 * x2 * x3 + t.alpha1 * (x1 * x1 - x3 * x3) - 2.0 * t.alpha2 * x1 * x2 +
          t.beta1 * (x2 * x2 - x3 * x3) - 2.0 * t.beta2 * x1 * x2 + 2.0 * t.beta3 * x1 * x3;
    r.y = 2.0 * t.alpha0 * x3 * x1 + t.alpha2 * (x2 * x2 - x1 * x1) - 2.0 * t.alpha3 * x2 * x3 +
          t.beta2 * (x3 * x3 - x1 * x1) - 2.0 * t.beta3 * x2 * x3 + 2.0 * t.beta1 * x1 * x2;
    r.z = 2.0 * t.alpha0 * x1 * x2 + t.alpha3 * (x3 * x3 - x2 * x2) - 2.0 * t.alpha1 * x3 * x1 +
          t.beta3 * (x1 * x1 - x2 * x2) - 2.0 * t.beta1 * x3 * x1 + 2.0 * t.beta2 * x3 * x2;
    return r;
}

Vec3 potential_gradient(const OctupolarTensor& t, const Vec3& p) {
    return 3.0 * quadratic_map(t, p);
}

Mat3 tensor_dot(const OctupolarTensor& t, const Vec3& p) {
    const Full3 a = assemble_full(t);
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[i][j][k] * p[k];
            m(i, j) = s;
        }
    return m;
}

double spherical_potential(const OctupolarTensor& t, const SphericalPoint& sp) {
    return potential(t, sp.cartesian());
}

namespace {

struct ChartFrame {
    Vec3 x;        // point
    Vec3 u1, u2;   // dx/dtheta1, dx/dtheta2
    Vec3 w11, w22, w12;  // second derivatives of x
};

ChartFrame chart_frame(const SphericalPoint& sp) {
    const double s1 = std::sin(sp.theta1), c1 = std::cos(sp.theta1);
    const double s2 = std::sin(sp.theta2), c2 = std::cos(sp.theta2);
    ChartFrame f;
    f.x = {c1 * c2, c1 * s2, s1};
    f.u1 = {-s1 * c2, -s1 * s2, c1};
    f.u2 = {-c1 * s2, c1 * c2, 0.0};
    f.w11 = -f.x;
    f.w22 = {-c1 * c2, -c1 * s2, 0.0};
    f.w12 = {s1 * s2, -s1 * c2, 0.0};
    return f;
}

}  // namespace

std::array<double, 2> spherical_gradient(const OctupolarTensor& t, const SphericalPoint& sp) {
    const ChartFrame f = chart_frame(sp);
    const Vec3 g = potential_gradient(t, f.x);
    return {dot(g, f.u1), dot(g, f.u2)};
}

Sym2 spherical_hessian(const OctupolarTensor& t, const SphericalPoint& sp) {
    if (std::abs(sp.theta1) > kPi / 2.0 - 1e-6)
        throw PolarChart("spherical_hessian: angular chart degenerates at the poles");
    const ChartFrame f = chart_frame(sp);
    const Vec3 g = potential_gradient(t, f.x);
    const Mat3 h = tensor_dot(t, f.x);  // grad^2 Phi = 6 h
    auto quad = [&h](const Vec3& a, const Vec3& b) { return 6.0 * dot(a, h * b); };
    Sym2 s;
    s.a = quad(f.u1, f.u1) + dot(g, f.w11);
    s.c = quad(f.u2, f.u2) + dot(g, f.w22);
    s.b = quad(f.u1, f.u2) + dot(g, f.w12);
    return s;
}

Sym2 pole_hessian(const OctupolarTensor& t, bool north) {
    const Vec3 v = north ? Vec3{0, 0, 1} : Vec3{0, 0, -1};
    const Mat3 h = tensor_dot(t, v);
    const double phi = potential(t, v);
    Sym2 s;
    s.a = 6.0 * h(0, 0) - 3.0 * phi;
    s.c = 6.0 * h(1, 1) - 3.0 * phi;
    s.b = 6.0 * h(0, 1);
    return s;
}

Sym2 sphere_hessian_in_basis(const OctupolarTensor& t, const Vec3& v, const Vec3& t1,
                             const Vec3& t2) {
    const Mat3 h = tensor_dot(t, v);
    const double phi = potential(t, v);
    Sym2 s;
    s.a = 6.0 * dot(t1, h * t1) - 3.0 * phi;
    s.c = 6.0 * dot(t2, h * t2) - 3.0 * phi;
    s.b = 6.0 * dot(t1, h * t2);
    return s;
}

Vec3 sphere_gradient(const OctupolarTensor& t, const Vec3& v) {
    const Vec3 q = quadratic_map(t, v);
    const double phi = dot(q, v);  // = Phi(v) for unit v
    return 3.0 * (q - phi * v);
}

Vec3 eigen_residual(const OctupolarTensor& t, const Vec3& p, double lambda, double unit_tol) {
    if (std::abs(norm(p) - 1.0) > unit_tol)
        throw NotUnitVector("eigen_residual: p is not a unit vector");
    return quadratic_map(t, p) - lambda * p;
}

OctupolarTensor transform(const OctupolarTensor& t, const Mat3& q) {
    const Full3 a = assemble_full(t);
    Full3 b{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                double s = 0.0;
                for (int p = 0; p < 3; ++p)
                    for (int r = 0; r < 3; ++r)
                        for (int w = 0; w < 3; ++w)
                            s += q(i, p) * q(j, r) * q(k, w) * a[p][r][w];
                b[i][j][k] = s;
            }
    return components_from_full(b);
}

}  // namespace octupolar
