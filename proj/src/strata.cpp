#include "octupolar/strata.hpp"

#include <algorithm>
#include <cmath>

#include "octupolar/classify.hpp"
#include "octupolar/errors.hpp"

namespace octupolar {

std::string to_string(MorseType m) {
    switch (m) {
        case MorseType::Max: return "max";
        case MorseType::Min: return "min";
        case MorseType::Saddle: return "saddle";
        case MorseType::DegenerateSaddle: return "degenerate-saddle";
        case MorseType::DegenerateExtremum: return "degenerate-extremum";
        case MorseType::CircleDegenerate: return "circle";
    }
    return "?";
}

std::string StratumLabel::name() const {
    switch (kind) {
        case Stratum::Bulk: return "bulk";
        case Stratum::Center: return "center";
        case Stratum::Disk: return "disk";
        case Stratum::Axis: return "axis";
        case Stratum::Tetrahedral: return "tetrahedral";
        case Stratum::PlaneP0: return "plane-P0";
        case Stratum::PlanePPlus: return "plane-P+";
        case Stratum::PlanePMinus: return "plane-P-";
    }
    return "?";
}

StratumLabel classify_stratum(const OrientedParams& p, double tol) {
    const double k = std::abs(p.k);
    if (k <= tol && p.rho <= tol) return {Stratum::Center};
    if (p.rho <= tol && std::abs(k - 1.0 / std::sqrt(2.0)) <= tol) return {Stratum::Tetrahedral};
    if (p.rho <= tol) return {Stratum::Axis};
    if (k <= tol) return {Stratum::Disk};
    const double chi = wrap_pi(p.chi);
    auto near = [&](double target) { return std::abs(wrap_pi(chi - target)) <= tol; };
    if (near(kPi / 2.0) || near(-kPi / 2.0)) return {Stratum::PlaneP0};
    if (near(-kPi / 6.0) || near(5.0 * kPi / 6.0)) return {Stratum::PlanePMinus};
    if (near(kPi / 6.0) || near(-5.0 * kPi / 6.0)) return {Stratum::PlanePPlus};
    return {Stratum::Bulk};
}

namespace {

void sort_points(std::vector<CriticalPoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        if (std::abs(a.location.theta1 - b.location.theta1) > 1e-12)
            return a.location.theta1 < b.location.theta1;
        return a.location.theta2 < b.location.theta2;
    });
}

// Classify each candidate location against the tensor, merging coincident
// candidates at bifurcation parameters.
std::vector<CriticalPoint> classify_all(const OctupolarTensor& t, const std::vector<Vec3>& cands,
                                        double merge_tol = 1e-7) {
    std::vector<Vec3> kept;
    for (const Vec3& c : cands) {
        bool dup = false;
        for (const Vec3& u : kept)
            if (sphere_distance(u, normalized(c)) < merge_tol) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(normalized(c));
    }
    std::vector<CriticalPoint> pts;
    pts.reserve(kept.size());
    for (const Vec3& v : kept) pts.push_back(classify_point(t, v));
    sort_points(pts);
    return pts;
}

Vec3 ang(double t1, double t2) { return SphericalPoint{t1, wrap_pi(t2)}.cartesian(); }

}  // namespace

std::vector<CriticalPoint> tetrahedral_spectrum() {
    const double k0 = 1.0 / std::sqrt(2.0);
    const OctupolarTensor t = from_cylinder(k0, 0.0, 0.0);
    const double num = std::asin(1.0 / 3.0);
    const double nus = std::asin(1.0 / std::sqrt(3.0));

    std::vector<Vec3> cands;
    cands.push_back({0, 0, 1});
    cands.push_back({0, 0, -1});
    // maxima at the tetrahedron vertices (southern hemisphere), minima antipodal
    for (double t2 : {kPi / 2.0, -kPi / 6.0, -5.0 * kPi / 6.0}) {
        cands.push_back(ang(-num, t2));
        cands.push_back(ang(nus, t2));
    }
    for (double t2 : {-kPi / 2.0, kPi / 6.0, 5.0 * kPi / 6.0}) {
        cands.push_back(ang(num, t2));
        cands.push_back(ang(-nus, t2));
    }
    return classify_all(t, cands);
}

std::pair<std::vector<CriticalPoint>, std::vector<CriticalCircle>> center_spectrum() {
    const OctupolarTensor t = from_cylinder(0.0, 0.0, 0.0);
    std::vector<CriticalPoint> pts;

    CriticalPoint np;
    np.location = {kPi / 2.0, 0.0};
    np.lambda = 1.0;
    np.hessian_eigs = {-6.0, -6.0};
    np.type = MorseType::Max;
    np.index = 1;
    pts.push_back(np);

    CriticalPoint sp;
    sp.location = {-kPi / 2.0, 0.0};
    sp.lambda = -1.0;
    sp.hessian_eigs = {6.0, 6.0};
    sp.type = MorseType::Min;
    sp.index = 1;
    pts.push_back(sp);
    sort_points(pts);

    const double lat = std::asin(1.0 / std::sqrt(5.0));
    const double val = 1.0 / std::sqrt(5.0);
    const double sig = 12.0 / std::sqrt(5.0);
    std::vector<CriticalCircle> circles = {
        {-lat, val, -sig},  // circle of degenerate maxima
        {lat, -val, sig},   // circle of degenerate minima
    };
    (void)t;
    return {pts, circles};
}

double d3h_tau_minus(double k) { return std::atan((k - std::sqrt(k * k + 4.0)) / 4.0); }
double d3h_tau_plus(double k) { return std::atan((k + std::sqrt(k * k + 4.0)) / 4.0); }

double d3h_zeta_minus(double k) {
    const double s4 = std::sqrt(k * k + 4.0);
    const double q = 1.0 / (10.0 + k * k - k * s4);
    return std::sqrt(2.0 * q * q * q) * (k * k * k - k * k * s4 + 13.0 * k + 5.0 * s4);
}

double d3h_zeta_plus(double k) {
    const double s4 = std::sqrt(k * k + 4.0);
    const double q = 1.0 / (10.0 + k * k + k * s4);
    return std::sqrt(2.0 * q * q * q) * (k * k * k + k * k * s4 + 13.0 * k - 5.0 * s4);
}

std::vector<CriticalPoint> d3h_spectrum(double k) {
    if (!(k > 0.0)) throw NonPositiveK("d3h_spectrum: k must be positive (k = 0 is D-infinity-h)");
    const OctupolarTensor t = from_cylinder(k, 0.0, 0.0);
    const double tau_m = d3h_tau_minus(k);
    const double tau_p = d3h_tau_plus(k);

    std::vector<Vec3> cands;
    cands.push_back({0, 0, 1});
    cands.push_back({0, 0, -1});
    for (double t2 : {kPi / 2.0, -kPi / 6.0, -5.0 * kPi / 6.0}) {
        cands.push_back(ang(tau_m, t2));  // maxima (tau_m < 0)
        cands.push_back(ang(tau_p, t2));  // saddles
    }
    for (double t2 : {-kPi / 2.0, kPi / 6.0, 5.0 * kPi / 6.0}) {
        cands.push_back(ang(-tau_m, t2));  // minima
        cands.push_back(ang(-tau_p, t2));  // saddles
    }
    return classify_all(t, cands);
}

std::vector<CriticalPoint> d2h_spectrum(double rho, double chi) {
    if (!(rho > 0.0 && rho <= 2.0))
        throw OutsideCylinder("d2h_spectrum: need 0 < rho <= 2 (rho = 0 is the center)");
    const OctupolarTensor t = from_cylinder(0.0, rho, chi);

    const double rp = 0.5 * safe_acos((rho + 3.0) / (3.0 * rho + 5.0));
    const double mu_p = chi / 2.0 + kPi / 4.0;
    const double mu_m = chi / 2.0 - kPi / 4.0;
    const double nu_p = chi / 2.0 + 3.0 * kPi / 4.0;
    const double nu_m = chi / 2.0 - 3.0 * kPi / 4.0;

    std::vector<Vec3> cands;
    cands.push_back({0, 0, 1});
    cands.push_back({0, 0, -1});
    for (double t2 : {-mu_p, -nu_m}) {
        cands.push_back(ang(rp, t2));   // minima
        cands.push_back(ang(-rp, t2));  // maxima
    }
    if (rho <= 1.0) {
        const double rm = 0.5 * safe_acos((rho - 3.0) / (3.0 * rho - 5.0));
        for (double t2 : {-mu_m, -nu_p}) {
            cands.push_back(ang(rm, t2));
            cands.push_back(ang(-rm, t2));
        }
    }
    if (rho >= 1.0) {
        const double r0 = safe_asin(1.0 / rho);
        const double om_p = (chi + r0) / 2.0;
        const double om_m = (chi - r0) / 2.0;
        for (double t2 : {-om_m, kPi - om_m, kPi / 2.0 - om_p, -om_p - kPi / 2.0})
            cands.push_back(ang(0.0, t2));
    }
    return classify_all(t, cands);
}

double curve_f(double rho) {
    if (!(rho >= 0.0 && rho <= 2.0)) throw OutsideCylinder("curve_f: rho must lie in [0, 2]");
    return std::sqrt(2.0 * rho * rho * (1.0 + rho) / (3.0 * (6.0 + rho)));
}

double curve_g(double rho) {
    if (!(rho >= 0.0 && rho <= 2.0)) throw OutsideCylinder("curve_g: rho must lie in [0, 2]");
    if (rho <= 1.0) return std::sqrt(2.0 * rho * rho * (1.0 - rho) / (3.0 * (6.0 - rho)));
    return std::sqrt(2.0 * (2.0 - rho) * (rho - 1.0));
}

std::vector<CriticalPoint> reflection_plane_spectrum(double k, double rho, int sign) {
    if (!(rho >= 0.0 && rho <= 2.0))
        throw OutsideCylinder("reflection_plane_spectrum: rho must lie in [0, 2]");
    if (k < 0.0) throw NonPositiveK("reflection_plane_spectrum: k must be >= 0");
    if (sign != 1 && sign != -1)
        throw OctupolarError("reflection_plane_spectrum: sign must be +1 or -1");
    const double chi = sign * kPi / 2.0;
    if (k <= 1e-12) {
        if (rho <= 1e-12)
            throw OctupolarError(
                "reflection_plane_spectrum: k = rho = 0 is the center (critical circles)");
        return d2h_spectrum(rho, chi);
    }
    const OctupolarTensor t = from_cylinder(k, rho, chi);

    std::vector<Vec3> cands;
    cands.push_back({0, 0, 1});
    cands.push_back({0, 0, -1});

    // meridian solutions theta2 = +/- pi/2
    if (sign > 0) {
        const double al = 5.0 + 2.0 * k * k + 8.0 * rho + 3.0 * rho * rho;
        const double be = 2.0 * k * std::sqrt(4.0 + k * k + 6.0 * rho + 2.0 * rho * rho);
        const double ga = 4.0 * k * k + (5.0 + 3.0 * rho) * (5.0 + 3.0 * rho);
        const double x_ab = std::sqrt(std::max(0.0, (al + be) / ga));
        const double x_amb = std::sqrt(std::max(0.0, (al - be) / ga));
        for (auto [x, t2] : {std::pair{x_ab, kPi / 2.0}, {-x_amb, kPi / 2.0},
                             {x_amb, -kPi / 2.0}, {-x_ab, -kPi / 2.0}})
            cands.push_back(ang(safe_asin(x), t2));
    } else {
        const double arg = 4.0 + k * k - 6.0 * rho + 2.0 * rho * rho;
        if (arg >= -1e-14) {  // below g(rho) on 1 < rho < 2 the quadruple is gone
            const double al = 5.0 + 2.0 * k * k - 8.0 * rho + 3.0 * rho * rho;
            const double be = 2.0 * k * std::sqrt(std::max(0.0, arg));
            const double ga = 4.0 * k * k + (5.0 - 3.0 * rho) * (5.0 - 3.0 * rho);
            const double x_ab = std::sqrt(std::max(0.0, (al + be) / ga));
            const double x_amb = std::sqrt(std::max(0.0, (al - be) / ga));
            const double s2 = (rho <= 1.0) ? -1.0 : 1.0;
            for (auto [x, t2] : {std::pair{x_ab, kPi / 2.0}, {s2 * x_amb, kPi / 2.0},
                                 {-x_amb * s2, -kPi / 2.0}, {-x_ab, -kPi / 2.0}})
                cands.push_back(ang(safe_asin(x), t2));
        }
    }

    // generic solutions theta2 != +/- pi/2
    const double sgn = (sign > 0) ? -1.0 : 1.0;  // sign of tan(theta1) relation
    auto add_generic = [&](double y) {
        if (!(y > 1e-13) || y > 1.0 + 1e-12) return;
        y = std::min(y, 1.0);
        for (double yy : {y, -y}) {
            const double tan1 = sgn * k * (1.0 - 4.0 * yy * yy) / (2.0 * rho * yy);
            const double t1 = std::atan(tan1);
            const double a = safe_asin(yy);
            cands.push_back(ang(t1, a));
            cands.push_back(ang(t1, kPi - a));
        }
    };
    if (rho > 1e-12) {
        if (sign > 0) {
            const double A = 2.0 * k * k * (4.0 - rho) + rho * rho * (1.0 - rho);
            const double b = 4.0 * std::pow(k, 4) * rho * rho +
                             4.0 * k * k * rho * rho * (4.0 - 3.0 * rho) +
                             std::pow(rho, 4) * (1.0 - rho) * (1.0 - rho);
            const double B = std::sqrt(std::max(0.0, b));
            const double C = 4.0 * (8.0 * k * k - rho * rho * rho);
            // (A - B)/C = k^2 (2 - rho) / (A + B), stable for any sign of C
            add_generic(std::sqrt(std::max(0.0, k * k * (2.0 - rho) / (A + B))));
            if (C > 0.0) add_generic(std::sqrt(std::max(0.0, (A + B) / C)));
        } else {
            const double A = 2.0 * k * k * (4.0 + rho) + rho * rho * (1.0 + rho);
            const double b = 4.0 * std::pow(k, 4) * rho * rho +
                             4.0 * k * k * rho * rho * (4.0 + 3.0 * rho) +
                             std::pow(rho, 4) * (1.0 + rho) * (1.0 + rho);
            const double B = std::sqrt(std::max(0.0, b));
            const double C = 4.0 * (8.0 * k * k + rho * rho * rho);
            add_generic(std::sqrt(std::max(0.0, k * k * (2.0 + rho) / (A + B))));
            add_generic(std::sqrt(std::max(0.0, (A + B) / C)));
        }
    }
    return classify_all(t, cands);
}

}  // namespace octupolar
