#include "octupolar/separatrix.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "octupolar/errors.hpp"
#include "octupolar/solver.hpp"
#include "octupolar/strata.hpp"
#include "octupolar/tensor.hpp"

namespace octupolar {

namespace {

std::vector<Vec3> continuation_seeds(const OrientedParams& p, const SolverConfig& cfg) {
    std::vector<Vec3> seeds = make_seed_grid(cfg.sep_seed_lat, cfg.sep_seed_lon);
    if (p.k > 1e-9)
        for (const CriticalPoint& cp : d3h_spectrum(p.k)) seeds.push_back(cp.location.cartesian());
    if (p.rho > 1e-9)
        for (const CriticalPoint& cp : d2h_spectrum(p.rho, p.chi))
            seeds.push_back(cp.location.cartesian());
    return seeds;
}

std::vector<Vec3> points_at(const OrientedParams& p, const SolverConfig& cfg) {
    const OctupolarTensor t = from_cylinder(p);
    std::vector<Vec3> pts = find_critical_points(t, continuation_seeds(p, cfg), cfg);
    if (pts.size() > 14 || pts.size() < 2 || pts.size() % 2 != 0) {
        // escalate to the full seed grid before giving up
        SolverConfig full = cfg;
        full.sep_seed_lat = cfg.seed_lat;
        full.sep_seed_lon = cfg.seed_lon;
        pts = find_critical_points(t, make_seed_grid(full.seed_lat, full.seed_lon), full);
        if (pts.size() > 14 || pts.size() < 2 || pts.size() % 2 != 0)
            throw CountAmbiguous("separatrix: unstable critical point count " +
                                 std::to_string(pts.size()));
    }
    return pts;
}

// transitive clustering of coincident points on the bifurcation locus
std::vector<int> cluster_sizes(const std::vector<Vec3>& pts, double tol) {
    std::vector<int> label(pts.size(), -1);
    int nc = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (label[i] >= 0) continue;
        label[i] = nc;
        std::vector<size_t> stack = {i};
        while (!stack.empty()) {
            const size_t a = stack.back();
            stack.pop_back();
            for (size_t b = 0; b < pts.size(); ++b)
                if (label[b] < 0 && sphere_distance(pts[a], pts[b]) < tol) {
                    label[b] = nc;
                    stack.push_back(b);
                }
        }
        ++nc;
    }
    std::vector<int> sizes(nc, 0);
    for (int l : label) ++sizes[l];
    return sizes;
}

struct OnSurface {
    int count = 0;
    char branch = '?';
};

OnSurface on_surface_analysis(const OrientedParams& p, const SolverConfig& cfg) {
    const std::vector<Vec3> pts = points_at(p, cfg);
    const std::vector<int> sizes = cluster_sizes(pts, cfg.cluster_tol);
    OnSurface r;
    r.count = static_cast<int>(sizes.size());
    int n3 = 0, n2 = 0;
    for (int s : sizes) {
        if (s >= 3) ++n3;
        if (s == 2) ++n2;
    }
    if (r.count <= 8)
        r.branch = 'c';
    else if (n3 > 0)
        r.branch = '1';
    else if (n2 > 0)
        r.branch = '2';
    else
        r.branch = '?';
    return r;
}

// Newton polish on the bordered system: critical point with singular Hessian.
double polish_degenerate_k(const OrientedParams& p0, double k0, const SolverConfig& cfg) {
    // most degenerate point at k0
    OrientedParams p = p0;
    p.k = k0;
    std::vector<Vec3> pts;
    try {
        pts = points_at(p, cfg);
    } catch (const CountAmbiguous&) {
        return k0;
    }
    const OctupolarTensor t0 = from_cylinder(p);
    Vec3 v0{0, 0, 1};
    double best = 1e300;
    for (const Vec3& v : pts) {
        const auto [t1, t2] = tangent_basis(v);
        const double d = std::abs(sphere_hessian_in_basis(t0, v, t1, t2).det());
        if (d < best) {
            best = d;
            v0 = v;
        }
    }
    const auto [b1, b2] = tangent_basis(v0);
    double a = 0.0, b = 0.0, k = k0;
    auto F = [&](double aa, double bb, double kk, double* out) {
        OrientedParams pp = p0;
        pp.k = kk;
        const OctupolarTensor tt = from_cylinder(pp);
        const Vec3 v = normalized(v0 + aa * b1 + bb * b2);
        const Vec3 g = sphere_gradient(tt, v);
        const auto [t1, t2] = tangent_basis(v);
        out[0] = dot(g, t1);
        out[1] = dot(g, t2);
        out[2] = sphere_hessian_in_basis(tt, v, t1, t2).det();
    };
    for (int it = 0; it < 8; ++it) {
        double f0[3];
        F(a, b, k, f0);
        const double h = 1e-7;
        double J[3][3];
        double fp[3];
        F(a + h, b, k, fp);
        for (int r = 0; r < 3; ++r) J[r][0] = (fp[r] - f0[r]) / h;
        F(a, b + h, k, fp);
        for (int r = 0; r < 3; ++r) J[r][1] = (fp[r] - f0[r]) / h;
        F(a, b, k + h, fp);
        for (int r = 0; r < 3; ++r) J[r][2] = (fp[r] - f0[r]) / h;
        // solve J d = -f0 (Cramer)
        const double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                           J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                           J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
        if (std::abs(det) < 1e-18) break;
        auto solve_col = [&](int col) {
            double m[3][3];
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) m[r][c] = (c == col) ? -f0[r] : J[r][c];
            return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                    m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                    m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) /
                   det;
        };
        const double da = solve_col(0), db = solve_col(1), dk = solve_col(2);
        if (!std::isfinite(da) || !std::isfinite(db) || !std::isfinite(dk)) break;
        a += da;
        b += db;
        k += dk;
        if (std::abs(dk) < 1e-13 && std::hypot(da, db) < 1e-12) break;
    }
    if (std::isfinite(k) && std::abs(k - k0) < 1e-3 && k >= 0.0) return k;
    return k0;
}

SeparatrixSection::Sample sample_at_rho(double chi, double rho, double k_warm,
                                        const SolverConfig& cfg) {
    auto count = [&](double k) {
        return static_cast<int>(points_at({k, rho, chi}, cfg).size());
    };
    double lo = 0.0, hi = cfg.k_upper;
    if (k_warm >= 0.0) {
        const double wlo = std::max(0.0, k_warm - 0.1), whi = std::min(cfg.k_upper, k_warm + 0.1);
        if (count(wlo) != 14 && count(whi) == 14) {
            lo = wlo;
            hi = whi;
        }
    }
    if (count(lo) == 14) {
        // separatrix at (or below) K = 0 for this rho
        SeparatrixSection::Sample s;
        s.rho = rho;
        s.k_crit = 0.0;
        const OnSurface os = on_surface_analysis({0.0, rho, chi}, cfg);
        s.on_count = os.count;
        s.branch = os.branch;
        return s;
    }
    while (count(hi) != 14) {
        hi *= 1.5;
        if (hi > 4.0) throw CountAmbiguous("separatrix: no 14-point phase above");
    }
    while (hi - lo > cfg.bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        if (count(mid) == 14)
            hi = mid;
        else
            lo = mid;
    }
    double kc = 0.5 * (lo + hi);
    const double polished = polish_degenerate_k({kc, rho, chi}, kc, cfg);
    if (polished > lo - 1e-4 && polished < hi + 1e-4) kc = polished;

    SeparatrixSection::Sample s;
    s.rho = rho;
    s.k_crit = kc;
    const OnSurface os = on_surface_analysis({kc, rho, chi}, cfg);
    s.on_count = os.count;
    s.branch = os.branch;
    return s;
}

}  // namespace

int count_critical_points(const OrientedParams& p, const SolverConfig& cfg) {
    return static_cast<int>(points_at(p, cfg).size());
}

SeparatrixSection trace_section(double chi, const std::vector<double>& rho_grid,
                                const SolverConfig& cfg) {
    SeparatrixSection sec;
    sec.chi = chi;
    double warm = -1.0;
    for (double rho : rho_grid) {
        if (!(rho > 0.0 && rho <= 2.0))
            throw OutsideCylinder("trace_section: rho grid must lie in (0, 2]");
        sec.samples.push_back(sample_at_rho(chi, rho, warm, cfg));
        warm = sec.samples.back().k_crit;
    }

    // locate the cusp: the rho where the S1 branch hands over to S2
    auto branch_at = [&](double rho) {
        return sample_at_rho(chi, rho, -1.0, cfg);
    };
    std::optional<double> lo, hi;
    for (size_t i = 0; i + 1 < sec.samples.size(); ++i) {
        if (sec.samples[i].branch == '1' && sec.samples[i + 1].branch != '1') {
            lo = sec.samples[i].rho;
            hi = sec.samples[i + 1].rho;
            break;
        }
    }
    if (lo && hi) {
        double a = *lo, b = *hi;
        while (b - a > 1e-7) {
            const double mid = 0.5 * (a + b);
            if (branch_at(mid).branch == '1')
                a = mid;
            else
                b = mid;
        }
        const double rho_star = 0.5 * (a + b);
        sec.cusp = {rho_star, sample_at_rho(chi, rho_star, -1.0, cfg).k_crit};
    } else if (!sec.samples.empty() && sec.samples.back().branch == '1' &&
               sec.samples.back().rho > 2.0 - 1e-9) {
        // S2 collapsed against the rim: the cusp sits at the sector corner
        sec.cusp = {sec.samples.back().rho, sec.samples.back().k_crit};
    }
    return sec;
}

SeparatrixSurface trace_surface(const std::vector<double>& chi_grid,
                                const std::vector<double>& rho_grid, const SolverConfig& cfg) {
    SeparatrixSurface surf;
    std::vector<std::future<SeparatrixSection>> futs;
    futs.reserve(chi_grid.size());
    for (double chi : chi_grid)
        futs.push_back(std::async(std::launch::async,
                                  [chi, &rho_grid, &cfg] { return trace_section(chi, rho_grid, cfg); }));
    for (auto& f : futs) surf.sections.push_back(f.get());

    for (const SeparatrixSection& s : surf.sections)
        if (s.cusp) surf.cusp_line.push_back({s.chi, s.cusp->first, s.cusp->second});
    // outer boundary of the 12-count fold: the rho = 2 rim arc in the K = 0
    // plane plus the K segment on the last section
    for (const SeparatrixSection& s : surf.sections) {
        if (s.samples.empty()) continue;
        const auto& last = s.samples.back();
        if (last.rho > 2.0 - 1e-9) surf.boundary_line.push_back({s.chi, last.rho, last.k_crit});
    }
    return surf;
}

}  // namespace octupolar
