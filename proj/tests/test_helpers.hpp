#pragma once

#include <random>

#include "octupolar/orientation.hpp"
#include "octupolar/tensor.hpp"

namespace octupolar::testing {

inline std::mt19937_64 make_rng(uint64_t seed = 20240817ULL) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline OctupolarTensor random_tensor(std::mt19937_64& rng, double amp = 1.0) {
    auto u = [&] { return uniform(rng, -amp, amp); };
    return {u(), u(), u(), u(), u(), u(), u()};
}

inline OrientedParams random_cylinder(std::mt19937_64& rng) {
    return {uniform(rng, 0.0, 1.2), uniform(rng, 0.0, 2.0), uniform(rng, -kPi, kPi)};
}

inline Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec3 v{n(rng), n(rng), n(rng)};
    while (norm(v) < 1e-3) v = {n(rng), n(rng), n(rng)};
    return normalized(v);
}

inline Mat3 random_rotation(std::mt19937_64& rng) {
    const Vec3 axis = random_unit(rng);
    return rotation_about_axis(axis, uniform(rng, 0.0, 2.0 * kPi));
}

// central finite differences of Psi in the angular chart
inline std::array<double, 2> fd_gradient(const OctupolarTensor& t, const SphericalPoint& sp,
                                         double h = 1e-6) {
    auto psi = [&](double a, double b) { return spherical_potential(t, {a, b}); };
    return {(psi(sp.theta1 + h, sp.theta2) - psi(sp.theta1 - h, sp.theta2)) / (2 * h),
            (psi(sp.theta1, sp.theta2 + h) - psi(sp.theta1, sp.theta2 - h)) / (2 * h)};
}

inline Sym2 fd_hessian(const OctupolarTensor& t, const SphericalPoint& sp, double h = 1e-5) {
    auto psi = [&](double a, double b) { return spherical_potential(t, {a, b}); };
    const double t1 = sp.theta1, t2 = sp.theta2;
    Sym2 s;
    s.a = (psi(t1 + h, t2) - 2 * psi(t1, t2) + psi(t1 - h, t2)) / (h * h);
    s.c = (psi(t1, t2 + h) - 2 * psi(t1, t2) + psi(t1, t2 - h)) / (h * h);
    s.b = (psi(t1 + h, t2 + h) - psi(t1 + h, t2 - h) - psi(t1 - h, t2 + h) + psi(t1 - h, t2 - h)) /
          (4 * h * h);
    return s;
}

}  // namespace octupolar::testing
