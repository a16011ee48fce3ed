#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace octupolar {

inline constexpr double kPi = std::numbers::pi;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

/// Angle in [0, pi] between two unit vectors.
inline double sphere_distance(const Vec3& a, const Vec3& b) {
    const double c = std::clamp(dot(a, b), -1.0, 1.0);
    return std::acos(c);
}

struct Mat3 {
    // row-major
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        r.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        return r;
    }

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    double max_abs_diff(const Mat3& o) const {
        double d = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(m[i][j] - o.m[i][j]));
        return d;
    }

    bool is_orthogonal(double tol) const {
        const Mat3 p = (*this) * transposed();
        return p.max_abs_diff(identity()) < tol;
    }
};

/// Rodrigues rotation about a unit axis.
inline Mat3 rotation_about_axis(const Vec3& axis, double angle) {
    const Vec3 u = normalized(axis);
    const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    Mat3 r;
    r.m = {{{c + u.x * u.x * t, u.x * u.y * t - u.z * s, u.x * u.z * t + u.y * s},
            {u.y * u.x * t + u.z * s, c + u.y * u.y * t, u.y * u.z * t - u.x * s},
            {u.z * u.x * t - u.y * s, u.z * u.y * t + u.x * s, c + u.z * u.z * t}}};
    return r;
}

inline Mat3 rotation_about_z(double angle) { return rotation_about_axis({0, 0, 1}, angle); }

/// Rotation R with R*a = b for unit vectors a, b.
inline Mat3 rotation_taking(const Vec3& a, const Vec3& b) {
    const Vec3 ax = cross(a, b);
    const double s = norm(ax), c = std::clamp(dot(a, b), -1.0, 1.0);
    if (s < 1e-14) {
        if (c > 0.0) return Mat3::identity();
        // antipodal: rotate by pi about any axis orthogonal to a
        Vec3 ortho = std::abs(a.x) < 0.9 ? cross(a, Vec3{1, 0, 0}) : cross(a, Vec3{0, 1, 0});
        return rotation_about_axis(ortho, kPi);
    }
    return rotation_about_axis(ax, std::atan2(s, c));
}

/// Symmetric 2x2 matrix [[a, b], [b, c]].
struct Sym2 {
    double a = 0.0, b = 0.0, c = 0.0;

    /// Eigenvalues in ascending order.
    std::array<double, 2> eigenvalues() const {
        const double tr = a + c;
        const double d = std::sqrt(std::max(0.0, (a - c) * (a - c) + 4.0 * b * b));
        return {0.5 * (tr - d), 0.5 * (tr + d)};
    }
    double det() const { return a * c - b * b; }
};

/// Wrap into [-pi, pi).
inline double wrap_pi(double a) {
    a = std::fmod(a + kPi, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a - kPi;
}

inline double safe_asin(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }
inline double safe_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

/// Orthonormal tangent basis at a unit vector v.
inline std::pair<Vec3, Vec3> tangent_basis(const Vec3& v) {
    Vec3 t1 = std::abs(v.z) < 0.9 ? cross(Vec3{0, 0, 1}, v) : cross(Vec3{1, 0, 0}, v);
    t1 = normalized(t1);
    const Vec3 t2 = cross(v, t1);
    return {t1, t2};
}

}  // namespace octupolar
