#include "octupolar/solver.hpp"

#include <algorithm>
#include <cmath>

#include "octupolar/classify.hpp"
#include "octupolar/errors.hpp"
#include "octupolar/newton.hpp"

namespace octupolar {

namespace {

void sort_points(std::vector<CriticalPoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        if (std::abs(a.location.theta1 - b.location.theta1) > 1e-12)
            return a.location.theta1 < b.location.theta1;
        return a.location.theta2 < b.location.theta2;
    });
}

}  // namespace

std::vector<Vec3> make_seed_grid(int nlat, int nlon) {
    std::vector<Vec3> seeds;
    seeds.reserve(static_cast<size_t>(nlat) * nlon + 2);
    for (int i = 0; i < nlat; ++i) {
        const double t1 = -kPi / 2.0 + (i + 0.5) * kPi / nlat;
        for (int j = 0; j < nlon; ++j) {
            const double t2 = -kPi + (j + 0.5) * 2.0 * kPi / nlon;
            seeds.push_back(SphericalPoint{t1, t2}.cartesian());
        }
    }
    seeds.push_back({0, 0, 1});
    seeds.push_back({0, 0, -1});
    return seeds;
}

std::vector<Vec3> find_critical_points(const OctupolarTensor& t, const std::vector<Vec3>& seeds,
                                       const SolverConfig& cfg, int* failures_out) {
    std::vector<Vec3> found;
    std::vector<double> found_grad;
    int failures = 0;
    auto try_seed = [&](Vec3 s) {
        NewtonResult nr = refine_critical(t, s, cfg.max_iters, cfg.grad_tol, cfg.damping);
        if (!nr.converged) {
            for (int r = 0; r < 3 && !nr.converged; ++r) {
                const Vec3 jitter{1e-3 * (r + 1.0), -7e-4 * (r + 1.0), 5e-4};
                nr = refine_critical(t, normalized(nr.v + jitter), 3 * cfg.max_iters, cfg.grad_tol,
                                     cfg.damping);
            }
        }
        if (!nr.converged) {
            ++failures;
            return;
        }
        for (size_t i = 0; i < found.size(); ++i)
            if (sphere_distance(found[i], nr.v) < cfg.dedup_tol) {
                if (nr.grad_norm < found_grad[i]) {
                    found[i] = nr.v;
                    found_grad[i] = nr.grad_norm;
                }
                return;
            }
        found.push_back(nr.v);
        found_grad.push_back(nr.grad_norm);
    };
    for (const Vec3& s : seeds) try_seed(s);

    // antipodal closure
    const size_t n0 = found.size();
    for (size_t i = 0; i < n0; ++i) {
        bool has = false;
        for (const Vec3& u : found)
            if (sphere_distance(u, -found[i]) < cfg.dedup_tol) {
                has = true;
                break;
            }
        if (!has) try_seed(-found[i]);
    }
    if (failures_out) *failures_out = failures;
    return found;
}

void finalize_report(SpectrumReport& rep, const OctupolarTensor& t) {
    sort_points(rep.points);
    rep.residuals.clear();
    rep.n_max = rep.n_min = rep.n_saddle = 0;
    rep.index_sum = 0;
    double best = -1e300, pole_val = -1e300;
    for (const CriticalPoint& cp : rep.points) {
        const Vec3 v = cp.location.cartesian();
        rep.residuals.push_back(norm(eigen_residual(t, v, cp.lambda, 1e-6)));
        switch (cp.type) {
            case MorseType::Max: ++rep.n_max; break;
            case MorseType::Min: ++rep.n_min; break;
            case MorseType::Saddle:
            case MorseType::DegenerateSaddle: ++rep.n_saddle; break;
            case MorseType::DegenerateExtremum:
                if (cp.lambda > 0)
                    ++rep.n_max;
                else
                    ++rep.n_min;
                break;
            case MorseType::CircleDegenerate: break;
        }
        rep.index_sum += cp.index;
        if (cp.type == MorseType::Max || cp.type == MorseType::DegenerateExtremum)
            best = std::max(best, cp.lambda);
        if (cp.location.theta1 > kPi / 2.0 - 1e-9) pole_val = cp.lambda;
    }
    for (const CriticalCircle& c : rep.circles)
        if (c.hessian_eig < 0) best = std::max(best, c.value);
    rep.absolute_max_at_pole = pole_val > best - 1e-9;

    if (rep.stratum.kind == Stratum::Bulk || rep.stratum.is_reflection_plane()) {
        const std::string base = (rep.n_max == 4) ? "B4" : (rep.n_max == 3 ? "B3" : "B?");
        rep.phase =
            rep.stratum.kind == Stratum::Bulk ? base : base + "/" + rep.stratum.name();
    } else {
        rep.phase = rep.stratum.name();
    }
}

SpectrumReport solve_spectrum(const OrientedParams& p, const SolverConfig& cfg) {
    if (!(p.rho >= 0.0 && p.rho <= 2.0))
        throw OutsideCylinder("solve_spectrum: rho must lie in [0, 2]");
    SpectrumReport rep;
    rep.params = {std::abs(p.k), p.rho, wrap_pi(p.chi)};
    rep.stratum = classify_stratum(rep.params, cfg.stratum_tol);
    const OctupolarTensor t = from_cylinder(rep.params);

    if (rep.stratum.kind == Stratum::Center) {
        auto [pts, circles] = center_spectrum();
        rep.points = std::move(pts);
        rep.circles = std::move(circles);
        finalize_report(rep, t);
        return rep;
    }

    std::vector<Vec3> seeds = make_seed_grid(cfg.seed_lat, cfg.seed_lon);
    // stratum points continue into the bulk; seed them as well
    if (rep.params.k > cfg.stratum_tol) {
        for (const CriticalPoint& cp : d3h_spectrum(rep.params.k))
            seeds.push_back(cp.location.cartesian());
    }
    if (rep.params.rho > cfg.stratum_tol) {
        for (const CriticalPoint& cp : d2h_spectrum(rep.params.rho, rep.params.chi))
            seeds.push_back(cp.location.cartesian());
    }

    int failures = 0;
    const std::vector<Vec3> found = find_critical_points(t, seeds, cfg, &failures);

    if (found.empty() || found.size() > 14)
        throw NonConvergence("solve_spectrum: implausible critical point count " +
                             std::to_string(found.size()));

    ClassifyOptions copt{cfg.degeneracy_rel_tol, cfg.winding_radius, cfg.winding_samples};
    for (const Vec3& v : found) rep.points.push_back(classify_point(t, v, copt));
    finalize_report(rep, t);

    if (rep.circles.empty() && rep.index_sum != 2)
        throw NonConvergence("solve_spectrum: Poincare-Hopf index sum " +
                             std::to_string(rep.index_sum) + " != 2; " +
                             std::to_string(failures) + " seeds unconverged");
    return rep;
}

namespace {

// ---- oracle machinery: Psi through the naive contraction only ----

struct OracleField {
    Full3 a;
    double psi(double t1, double t2) const {
        return contract_full(a, SphericalPoint{t1, t2}.cartesian());
    }
    // central finite differences in the angular chart
    std::array<double, 2> grad(double t1, double t2, double h = 1e-6) const {
        return {(psi(t1 + h, t2) - psi(t1 - h, t2)) / (2.0 * h),
                (psi(t1, t2 + h) - psi(t1, t2 - h)) / (2.0 * h)};
    }
    double grad_norm2(double t1, double t2) const {
        const auto g = grad(t1, t2);
        return g[0] * g[0] + g[1] * g[1];
    }
    Sym2 hessian(double t1, double t2, double h = 1e-4) const {
        Sym2 s;
        s.a = (psi(t1 + h, t2) - 2.0 * psi(t1, t2) + psi(t1 - h, t2)) / (h * h);
        s.c = (psi(t1, t2 + h) - 2.0 * psi(t1, t2) + psi(t1, t2 - h)) / (h * h);
        s.b = (psi(t1 + h, t2 + h) - psi(t1 + h, t2 - h) - psi(t1 - h, t2 + h) +
               psi(t1 - h, t2 - h)) /
              (4.0 * h * h);
        return s;
    }
};

// compass pattern search on |grad|^2
std::array<double, 2> pattern_search(const OracleField& f, double t1, double t2, double h0) {
    double h = h0;
    double best = f.grad_norm2(t1, t2);
    while (h > 1e-10) {
        bool improved = false;
        const double c1[4] = {t1 + h, t1 - h, t1, t1};
        const double c2[4] = {t2, t2, t2 + h, t2 - h};
        for (int d = 0; d < 4; ++d) {
            if (std::abs(c1[d]) > kPi / 2.0 - 1e-7) continue;
            const double v = f.grad_norm2(c1[d], c2[d]);
            if (v < best) {
                best = v;
                t1 = c1[d];
                t2 = c2[d];
                improved = true;
            }
        }
        if (!improved) h *= 0.5;
    }
    return {t1, t2};
}

int fd_winding(const OracleField& f, double t1, double t2, double radius) {
    double total = 0.0, prev = 0.0;
    const int n = 64;
    for (int i = 0; i <= n; ++i) {
        const double phi = 2.0 * kPi * i / n;
        const auto g = f.grad(t1 + radius * std::cos(phi), t2 + radius * std::sin(phi));
        const double ang = std::atan2(g[1], g[0]);
        if (i > 0) {
            double d = ang - prev;
            while (d > kPi) d -= 2.0 * kPi;
            while (d < -kPi) d += 2.0 * kPi;
            total += d;
        }
        prev = ang;
    }
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace

SpectrumReport oracle_spectrum(const OrientedParams& p, int n_lat, int n_lon) {
    n_lat = std::max(n_lat, 256);
    n_lon = std::max(n_lon, 512);
    SpectrumReport rep;
    rep.params = {std::abs(p.k), p.rho, wrap_pi(p.chi)};
    rep.stratum = classify_stratum(rep.params, 1e-9);
    const OctupolarTensor t = from_cylinder(rep.params);
    const OracleField f{assemble_full(t)};

    // gradient norm on the grid
    std::vector<std::vector<double>> gn(n_lat, std::vector<double>(n_lon));
    auto lat = [&](int i) { return -kPi / 2.0 + (i + 0.5) * kPi / n_lat; };
    auto lon = [&](int j) { return -kPi + (j + 0.5) * 2.0 * kPi / n_lon; };
    for (int i = 0; i < n_lat; ++i)
        for (int j = 0; j < n_lon; ++j) gn[i][j] = f.grad_norm2(lat(i), lon(j));

    std::vector<std::array<double, 2>> refined;
    for (int i = 0; i < n_lat; ++i)
        for (int j = 0; j < n_lon; ++j) {
            bool is_min = true;
            for (int di = -1; di <= 1 && is_min; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const int ii = i + di;
                    if (ii < 0 || ii >= n_lat) continue;
                    const int jj = (j + dj + n_lon) % n_lon;
                    if (gn[ii][jj] < gn[i][j]) {
                        is_min = false;
                        break;
                    }
                }
            if (!is_min) continue;
            auto r = pattern_search(f, lat(i), lon(j), kPi / n_lat);
            if (f.grad_norm2(r[0], r[1]) > 1e-14) continue;  // spurious |grad|^2 local min
            refined.push_back(r);
        }

    // poles are always critical for oriented tensors
    std::vector<Vec3> pts = {{0, 0, 1}, {0, 0, -1}};
    for (const auto& r : refined) {
        const Vec3 v = SphericalPoint{r[0], wrap_pi(r[1])}.cartesian();
        bool dup = false;
        for (const Vec3& u : pts)
            if (sphere_distance(u, v) < 5e-4) {
                dup = true;
                break;
            }
        if (!dup) pts.push_back(v);
    }

    // collapse latitude bands into circles (D-infinity-h)
    std::vector<bool> in_circle(pts.size(), false);
    if (rep.stratum.kind == Stratum::Center) {
        for (size_t i = 2; i < pts.size(); ++i) {
            std::vector<size_t> band;
            if (in_circle[i]) continue;
            for (size_t j = 2; j < pts.size(); ++j)
                if (!in_circle[j] && std::abs(pts[j].z - pts[i].z) < 1e-3) band.push_back(j);
            if (band.size() >= 12) {
                for (size_t j : band) in_circle[j] = true;
                const double th1 = safe_asin(pts[i].z);
                CriticalCircle c;
                c.theta1 = th1;
                c.value = f.psi(th1, 0.0);
                c.hessian_eig = f.hessian(th1, 0.0).a;
                rep.circles.push_back(c);
            }
        }
        std::sort(rep.circles.begin(), rep.circles.end(),
                  [](const CriticalCircle& a, const CriticalCircle& b) { return a.theta1 < b.theta1; });
    }

    for (size_t i = 0; i < pts.size(); ++i) {
        if (in_circle[i]) continue;
        const SphericalPoint sp = SphericalPoint::from_cartesian(pts[i]);
        CriticalPoint cp;
        cp.location = sp;
        cp.lambda = contract_full(f.a, pts[i]);
        Sym2 h;
        if (std::abs(sp.theta1) > kPi / 2.0 - 1e-6) {
            h = pole_hessian(t, sp.theta1 > 0);
        } else {
            h = f.hessian(sp.theta1, sp.theta2);
        }
        cp.hessian_eigs = h.eigenvalues();
        const double big = std::max(std::abs(cp.hessian_eigs[0]), std::abs(cp.hessian_eigs[1]));
        const double small = std::min(std::abs(cp.hessian_eigs[0]), std::abs(cp.hessian_eigs[1]));
        if (small > 1e-5 * std::max(big, 1e-3)) {
            if (cp.hessian_eigs[1] < 0) {
                cp.type = MorseType::Max;
                cp.index = 1;
            } else if (cp.hessian_eigs[0] > 0) {
                cp.type = MorseType::Min;
                cp.index = 1;
            } else {
                cp.type = MorseType::Saddle;
                cp.index = -1;
            }
        } else {
            double t1w = sp.theta1, t2w = sp.theta2;
            OracleField fw = f;
            if (std::abs(sp.theta1) > 1.2) {
                fw.a = assemble_full(transform(t, rotation_taking(pts[i], {1, 0, 0})));
                t1w = 0.0;
                t2w = 0.0;
            }
            cp.index = fd_winding(fw, t1w, t2w, 2e-3);
            cp.type = (cp.index == 1) ? MorseType::DegenerateExtremum : MorseType::DegenerateSaddle;
        }
        rep.points.push_back(cp);
    }
    finalize_report(rep, t);
    return rep;
}

CubicExpansion monkey_saddle_check(const OctupolarTensor& t, const SphericalPoint& location) {
    const double scale = std::max(1.0, t.max_abs_param());
    const auto g = spherical_gradient(t, location);
    if (std::hypot(g[0], g[1]) > 1e-8 * scale)
        throw NotCritical("monkey_saddle_check: not a critical point");
    const Sym2 h = spherical_hessian(t, location);
    const auto eig = h.eigenvalues();
    if (std::min(std::abs(eig[0]), std::abs(eig[1])) >
        1e-6 * std::max({std::abs(eig[0]), std::abs(eig[1]), 1.0}))
        throw NotDegenerate("monkey_saddle_check: Hessian is not degenerate");

    CubicExpansion ex;
    ex.value = spherical_potential(t, location);
    ex.gradient = g;
    ex.a20 = 0.5 * h.a;
    ex.a11 = h.b;
    ex.a02 = 0.5 * h.c;

    // third derivatives: 5-point stencil applied to the analytic Hessian
    const double hs = 1e-3;
    auto H = [&](double d1, double d2) {
        return spherical_hessian(t, {location.theta1 + d1, location.theta2 + d2});
    };
    auto d5 = [&](auto entry, bool along_t1) {
        auto at = [&](double s) { return along_t1 ? entry(H(s, 0)) : entry(H(0, s)); };
        return (-at(2 * hs) + 8.0 * at(hs) - 8.0 * at(-hs) + at(-2 * hs)) / (12.0 * hs);
    };
    auto e11 = [](const Sym2& s) { return s.a; };
    auto e22 = [](const Sym2& s) { return s.c; };
    ex.a30 = d5(e11, true) / 6.0;
    ex.a21 = d5(e11, false) / 2.0;
    ex.a12 = d5(e22, true) / 2.0;
    ex.a03 = d5(e22, false) / 6.0;
    return ex;
}

}  // namespace octupolar
