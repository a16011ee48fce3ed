#include "octupolar/orientation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "octupolar/errors.hpp"
#include "octupolar/newton.hpp"

namespace octupolar {

OctupolarTensor from_cylinder(double k, double rho, double chi) {
    if (!(rho >= 0.0 && rho <= 2.0))
        throw OutsideCylinder("from_cylinder: rho must lie in [0, 2]");
    OctupolarTensor t;
    t.alpha0 = 0.5 * rho * std::cos(chi);
    t.beta3 = -0.5 + 0.5 * rho * std::sin(chi);
    t.alpha2 = std::abs(k);  // gamma_1 fold for k < 0
    t.alpha3 = 1.0;
    return t;
}

OrientedParams params_of(const OctupolarTensor& t) {
    OrientedParams p;
    p.k = t.alpha2;
    const double wx = t.alpha0, wy = t.beta3 + 0.5;
    p.rho = 2.0 * std::hypot(wx, wy);
    p.chi = (p.rho < 1e-12) ? 0.0 : std::atan2(wy, wx);
    return p;
}

Sym2 north_pole_hessian(const OrientedParams& p) {
    Sym2 h;
    h.a = 3.0 * (p.rho * std::sin(p.chi) - 2.0);
    h.c = 3.0 * (-p.rho * std::sin(p.chi) - 2.0);
    h.b = 3.0 * p.rho * std::cos(p.chi);
    return h;
}

OrientedParams canonical_form(const OrientedParams& p) {
    OrientedParams q;
    q.k = std::abs(p.k);  // gamma_1
    q.rho = p.rho;
    double chi = wrap_pi(p.chi);
    while (chi >= kPi / 6.0) chi -= 2.0 * kPi / 3.0;  // gamma_3 shifts
    while (chi < -kPi / 2.0) chi += 2.0 * kPi / 3.0;
    if (chi > -kPi / 6.0) chi = -kPi / 3.0 - chi;  // gamma_1 o gamma_2 reflection
    q.chi = chi;
    return q;
}

OctupolarTensor scaled(const OctupolarTensor& t, double s) {
    OctupolarTensor r = t;
    r.alpha0 *= s;
    r.alpha1 *= s;
    r.alpha2 *= s;
    r.alpha3 *= s;
    r.beta1 *= s;
    r.beta2 *= s;
    r.beta3 *= s;
    return r;
}

OctupolarTensor reconstruct(const OrientResult& r) {
    return scaled(transform(from_cylinder(r.params), r.rotation), r.scale);
}

namespace {

// All refined local maxima of Phi on the sphere, from a coarse grid.
std::vector<Vec3> grid_maxima(const OctupolarTensor& t, int nlat = 64, int nlon = 128) {
    std::vector<std::vector<double>> val(nlat, std::vector<double>(nlon));
    auto point = [&](int i, int j) {
        const double t1 = -kPi / 2.0 + (i + 0.5) * kPi / nlat;
        const double t2 = -kPi + j * 2.0 * kPi / nlon;
        return SphericalPoint{t1, t2}.cartesian();
    };
    for (int i = 0; i < nlat; ++i)
        for (int j = 0; j < nlon; ++j) val[i][j] = potential(t, point(i, j));

    std::vector<Vec3> seeds;
    for (int i = 0; i < nlat; ++i)
        for (int j = 0; j < nlon; ++j) {
            bool best = true;
            for (int di = -1; di <= 1 && best; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const int ii = i + di;
                    if (ii < 0 || ii >= nlat) continue;
                    const int jj = (j + dj + nlon) % nlon;
                    if (val[ii][jj] > val[i][j]) {
                        best = false;
                        break;
                    }
                }
            if (best) seeds.push_back(point(i, j));
        }
    seeds.push_back({0, 0, 1});
    seeds.push_back({0, 0, -1});

    std::vector<Vec3> maxima;
    for (const Vec3& s : seeds) {
        const NewtonResult nr = refine_critical(t, s, 60, 1e-13 * std::max(1.0, t.max_abs_param()));
        if (!nr.converged) continue;
        const auto [b1, b2] = tangent_basis(nr.v);
        const auto eig = sphere_hessian_in_basis(t, nr.v, b1, b2).eigenvalues();
        if (eig[1] > 1e-9 * std::max(1.0, std::abs(eig[0]))) continue;  // not a maximum
        bool dup = false;
        for (const Vec3& m : maxima)
            if (sphere_distance(m, nr.v) < 1e-7) {
                dup = true;
                break;
            }
        if (!dup) maxima.push_back(nr.v);
    }
    return maxima;
}

}  // namespace

OrientResult orient(const OctupolarTensor& t) {
    const double scale0 = t.max_abs_param();
    if (scale0 < 1e-14) throw ZeroTensor("orient: all components vanish");

    std::vector<Vec3> maxima = grid_maxima(t);
    double best = -1e300;
    for (const Vec3& m : maxima) best = std::max(best, potential(t, m));
    // keep the global ones; break value ties lexicographically in (theta1, theta2)
    std::vector<Vec3> global;
    for (const Vec3& m : maxima)
        if (potential(t, m) > best - 1e-9 * std::max(1.0, std::abs(best))) global.push_back(m);
    std::sort(global.begin(), global.end(), [](const Vec3& a, const Vec3& b) {
        const auto sa = SphericalPoint::from_cartesian(a), sb = SphericalPoint::from_cartesian(b);
        if (sa.theta1 != sb.theta1) return sa.theta1 < sb.theta1;
        return sa.theta2 < sb.theta2;
    });
    const Vec3 vstar = global.front();

    const Mat3 r1 = rotation_taking(vstar, {0, 0, 1});
    const OctupolarTensor t1 = transform(t, r1);
    const double lambda_n = t1.alpha3;  // = Phi(north pole) > 0 at a global max

    struct Candidate {
        OrientedParams params;
        Mat3 q;
        double chi_key;
        int refl;
        int k;
    };
    std::vector<Candidate> accepted;

    const double base = std::atan2(-t1.alpha1, t1.alpha2);
    const Mat3 mirror_x = [] {
        Mat3 m = Mat3::identity();
        m(0, 0) = -1.0;
        return m;
    }();
    for (int k = 0; k < 6; ++k) {
        const double phi = (base + k * kPi) / 3.0;
        for (int refl = 0; refl < 2; ++refl) {
            Mat3 q = rotation_about_z(phi) * r1;
            if (refl) q = mirror_x * q;
            const OctupolarTensor tc = scaled(transform(t, q), 1.0 / lambda_n);
            OrientedParams p = params_of(tc);
            if (p.rho < 1e-12) {
                p.rho = 0.0;
                p.chi = -kPi / 3.0;
            }
            if (p.k < -1e-10) continue;
            if (p.k < 0.0) p.k = 0.0;
            if (p.chi < -kPi / 2.0 - 1e-9 || p.chi > -kPi / 6.0 + 1e-9) continue;
            p.rho = std::min(p.rho, 2.0);
            accepted.push_back({p, q, p.chi, refl, k});
        }
    }
    if (accepted.empty()) throw NonConvergence("orient: no canonical in-plane frame found");
    std::sort(accepted.begin(), accepted.end(), [](const Candidate& a, const Candidate& b) {
        if (a.chi_key != b.chi_key) return a.chi_key < b.chi_key;
        if (a.refl != b.refl) return a.refl < b.refl;
        return a.k < b.k;
    });

    OrientResult res;
    res.params = accepted.front().params;
    res.rotation = accepted.front().q.transposed();
    res.scale = lambda_n;
    return res;
}

}  // namespace octupolar
