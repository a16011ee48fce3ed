#include "octupolar/group.hpp"

#include <algorithm>
#include <cmath>

#include "octupolar/errors.hpp"
#include "octupolar/tensor.hpp"

namespace octupolar {

namespace {

const double S2 = std::sqrt(2.0);
const double S3 = std::sqrt(3.0);
const double S23 = std::sqrt(2.0 / 3.0);  // sqrt(2/3)
const double H = 0.5;
const double S32 = S3 / 2.0;        // sqrt(3)/2
const double I23 = 1.0 / (2.0 * S3);  // 1/(2 sqrt 3)
const double I3 = 1.0 / S3;
const double T22 = 2.0 * S2 / 3.0;  // 2 sqrt(2)/3
const double T2 = S2 / 3.0;         // sqrt(2)/3

Mat3 mat(std::array<std::array<double, 3>, 3> rows) {
    Mat3 m;
    m.m = rows;
    return m;
}

std::vector<Mat3> proper_half() {
    return {
        mat({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}),                            // M1
        mat({{{-H, S32, 0}, {-S32, -H, 0}, {0, 0, 1}}}),                     // M2
        mat({{{-H, -S32, 0}, {S32, -H, 0}, {0, 0, 1}}}),                     // M3
        mat({{{H, S32, 0}, {I23, -1.0 / 6, T22}, {S23, -T2, -1.0 / 3}}}),    // M4
        mat({{{H, I23, S23}, {S32, -1.0 / 6, -T2}, {0, T22, -1.0 / 3}}}),    // M5
        mat({{{H, -S32, 0}, {-I23, -1.0 / 6, T22}, {-S23, -T2, -1.0 / 3}}}), // M6
        mat({{{H, -I23, -S23}, {-S32, -1.0 / 6, -T2}, {0, T22, -1.0 / 3}}}), // M7
        mat({{{-H, I23, S23}, {-I23, 5.0 / 6, -T2}, {-S23, -T2, -1.0 / 3}}}),// M8
        mat({{{-H, -I23, -S23}, {I23, 5.0 / 6, -T2}, {S23, -T2, -1.0 / 3}}}),// M9
        mat({{{0, I3, -S23}, {I3, -2.0 / 3, -T2}, {-S23, -T2, -1.0 / 3}}}),  // M10
        mat({{{0, -I3, S23}, {-I3, -2.0 / 3, -T2}, {S23, -T2, -1.0 / 3}}}),  // M11
        mat({{{-1, 0, 0}, {0, 1.0 / 3, T22}, {0, T22, -1.0 / 3}}}),          // M12
    };
}

}  // namespace

const std::vector<GroupElement>& td_elements() {
    static const std::vector<GroupElement> elements = [] {
        std::vector<GroupElement> es;
        const std::vector<Mat3> plus = proper_half();
        const Mat3 m1m = mat({{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
        for (int k = 0; k < 12; ++k) es.push_back({plus[k], 1, k + 1});
        for (int k = 0; k < 12; ++k) es.push_back({m1m * plus[k], -1, k + 13});
        return es;
    }();
    return elements;
}

const std::array<Vec3, 4>& tetra_vertices() {
    static const std::array<Vec3, 4> v = {
        Vec3{0, T22, -1.0 / 3},
        Vec3{S23, -T2, -1.0 / 3},
        Vec3{-S23, -T2, -1.0 / 3},
        Vec3{0, 0, 1},
    };
    return v;
}

const MulTable& multiplication_table() {
    static const MulTable table = [] {
        MulTable t{};
        const auto& es = td_elements();
        for (int i = 0; i < 24; ++i)
            for (int j = 0; j < 24; ++j) {
                const Mat3 p = es[i].matrix * es[j].matrix;
                int best = -1;
                double bd = 1e300;
                for (int k = 0; k < 24; ++k) {
                    const double d = p.max_abs_diff(es[k].matrix);
                    if (d < bd) {
                        bd = d;
                        best = k;
                    }
                }
                if (bd > 1e-9) throw OctupolarError("multiplication_table: product not in group");
                t[i][j] = best + 1;
            }
        return t;
    }();
    return table;
}

namespace {

// The published 12x12 blocks, entry-for-entry.
constexpr int P11[12][12] = {
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
    {2, 3, 1, 11, 7, 8, 12, 10, 4, 6, 9, 5},
    {3, 1, 2, 9, 12, 10, 5, 6, 11, 8, 4, 7},
    {4, 12, 6, 5, 1, 11, 9, 2, 10, 7, 3, 8},
    {5, 8, 11, 1, 4, 3, 10, 12, 7, 9, 6, 2},
    {6, 4, 12, 10, 8, 7, 1, 11, 3, 2, 5, 9},
    {7, 10, 9, 2, 11, 1, 6, 5, 12, 4, 8, 3},
    {8, 11, 5, 6, 10, 12, 2, 9, 1, 3, 7, 4},
    {9, 7, 10, 12, 3, 4, 11, 1, 8, 5, 2, 6},
    {10, 9, 7, 8, 6, 5, 3, 4, 2, 1, 12, 11},
    {11, 5, 8, 7, 2, 9, 4, 3, 6, 12, 1, 10},
    {12, 6, 4, 3, 9, 2, 8, 7, 5, 11, 10, 1},
};

constexpr int P12[12][12] = {
    {13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24},
    {15, 13, 14, 21, 24, 22, 17, 18, 23, 20, 16, 19},
    {14, 15, 13, 23, 19, 20, 24, 22, 16, 18, 21, 17},
    {18, 16, 24, 22, 20, 19, 13, 23, 15, 14, 17, 21},
    {19, 22, 21, 14, 23, 13, 18, 17, 24, 16, 20, 15},
    {16, 24, 18, 17, 13, 23, 21, 14, 22, 19, 15, 20},
    {17, 20, 23, 13, 16, 15, 22, 24, 19, 21, 18, 14},
    {21, 19, 22, 24, 15, 16, 23, 13, 20, 17, 14, 18},
    {20, 23, 17, 18, 22, 24, 14, 21, 13, 15, 19, 16},
    {23, 17, 20, 19, 14, 21, 16, 15, 18, 24, 13, 22},
    {22, 21, 19, 20, 18, 17, 15, 16, 14, 13, 24, 23},
    {24, 18, 16, 15, 21, 14, 20, 19, 17, 23, 22, 13},
};

constexpr int P21[12][12] = {
    {13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24},
    {14, 15, 13, 23, 19, 20, 24, 22, 16, 18, 21, 17},
    {15, 13, 14, 21, 24, 22, 17, 18, 23, 20, 16, 19},
    {16, 24, 18, 17, 13, 23, 21, 14, 22, 19, 15, 20},
    {17, 20, 23, 13, 16, 15, 22, 24, 19, 21, 18, 14},
    {18, 16, 24, 22, 20, 19, 13, 23, 15, 14, 17, 21},
    {19, 22, 21, 14, 23, 13, 18, 17, 24, 16, 20, 15},
    {20, 23, 17, 18, 22, 24, 14, 21, 13, 15, 19, 16},
    {21, 19, 22, 24, 15, 16, 23, 13, 20, 17, 14, 18},
    {22, 21, 19, 20, 18, 17, 15, 16, 14, 13, 24, 23},
    {23, 17, 20, 19, 14, 21, 16, 15, 18, 24, 13, 22},
    {24, 18, 16, 15, 21, 14, 20, 19, 17, 23, 22, 13},
};

constexpr int P22[12][12] = {
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
    {3, 1, 2, 9, 12, 10, 5, 6, 11, 8, 4, 7},
    {2, 3, 1, 11, 7, 8, 12, 10, 4, 6, 9, 5},
    {6, 4, 12, 10, 8, 7, 1, 11, 3, 2, 5, 9},
    {7, 10, 9, 2, 11, 1, 6, 5, 12, 4, 8, 3},
    {4, 12, 6, 5, 1, 11, 9, 2, 10, 7, 3, 8},
    {5, 8, 11, 1, 4, 3, 10, 12, 7, 9, 6, 2},
    {9, 7, 10, 12, 3, 4, 11, 1, 8, 5, 2, 6},
    {8, 11, 5, 6, 10, 12, 2, 9, 1, 3, 7, 4},
    {11, 5, 8, 7, 2, 9, 4, 3, 6, 12, 1, 10},
    {10, 9, 7, 8, 6, 5, 3, 4, 2, 1, 12, 11},
    {12, 6, 4, 3, 9, 2, 8, 7, 5, 11, 10, 1},
};

}  // namespace

const MulTable& transcribed_multiplication_table() {
    static const MulTable table = [] {
        MulTable t{};
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j) {
                t[i][j] = P11[i][j];
                t[i][j + 12] = P12[i][j];
                t[i + 12][j] = P21[i][j];
                t[i + 12][j + 12] = P22[i][j];
            }
        return t;
    }();
    return table;
}

const std::vector<Subgroup>& subgroup_lattice() {
    static const std::vector<Subgroup> lattice = [] {
        std::vector<Subgroup> g;
        auto axis = [](double x, double y, double z) { return normalized(Vec3{x, y, z}); };
        g.push_back({"G1", {1, 2, 3}, axis(0, 0, 1)});
        g.push_back({"G2", {1, 4, 5}, axis(std::sqrt(6.0), S2, 1)});
        g.push_back({"G3", {1, 6, 7}, axis(-std::sqrt(6.0), S2, 1)});
        g.push_back({"G4", {1, 8, 9}, axis(0, -2.0 * S2, 1)});
        g.push_back({"G5", {1, 10}, axis(-std::sqrt(1.5), -std::sqrt(0.5), 1)});
        g.push_back({"G6", {1, 11}, axis(std::sqrt(1.5), -std::sqrt(0.5), 1)});
        g.push_back({"G7", {1, 12}, axis(0, S2, 1)});
        g.push_back({"G8", {1, 10, 11, 12}, std::nullopt});
        const std::vector<std::vector<int>> ga = {
            {1, 2, 3, 13, 14, 15}, {1, 2, 3, 16, 21, 23}, {1, 2, 3, 17, 19, 24},
            {1, 2, 3, 18, 20, 22}, {1, 4, 5, 13, 18, 19}, {1, 4, 5, 14, 16, 22},
            {1, 4, 5, 15, 21, 24}, {1, 4, 5, 17, 20, 23}, {1, 8, 9, 13, 20, 21},
            {1, 8, 9, 14, 19, 23}, {1, 8, 9, 15, 17, 22}, {1, 8, 9, 16, 18, 24},
        };
        const std::vector<std::vector<int>> gb = {
            {1, 10, 13, 23}, {1, 10, 14, 17}, {1, 10, 15, 20}, {1, 10, 16, 19},
            {1, 10, 18, 21}, {1, 10, 22, 24}, {1, 11, 13, 22}, {1, 11, 14, 21},
            {1, 11, 15, 19}, {1, 11, 16, 20}, {1, 11, 17, 18}, {1, 11, 23, 24},
            {1, 12, 13, 24}, {1, 12, 14, 18}, {1, 12, 15, 16}, {1, 12, 17, 21},
            {1, 12, 19, 20}, {1, 12, 22, 23},
        };
        const std::vector<std::vector<int>> gc = {
            {1, 10, 11, 12, 13, 22, 23, 24},
            {1, 10, 11, 12, 14, 17, 18, 21},
            {1, 10, 11, 12, 15, 16, 19, 20},
        };
        const std::vector<std::vector<int>> gd = {
            {1, 13}, {1, 14}, {1, 15}, {1, 20}, {1, 21}, {1, 24},
        };
        auto add_family = [&](const char* base, const std::vector<std::vector<int>>& sets) {
            int n = 0;
            for (const auto& ids : sets)
                g.push_back({std::string(base) + "." + std::to_string(++n), ids, std::nullopt});
        };
        add_family("Ga", ga);
        add_family("Gb", gb);
        add_family("Gc", gc);
        add_family("Gd", gd);
        return g;
    }();
    return lattice;
}

bool is_closed(const std::vector<int>& ids) {
    const MulTable& t = multiplication_table();
    for (int a : ids)
        for (int b : ids) {
            const int c = t[a - 1][b - 1];
            if (std::find(ids.begin(), ids.end(), c) == ids.end()) return false;
        }
    return true;
}

bool is_normal(const std::vector<int>& ids) {
    const MulTable& t = multiplication_table();
    // inverse lookup
    std::array<int, 24> inv{};
    for (int a = 1; a <= 24; ++a)
        for (int b = 1; b <= 24; ++b)
            if (t[a - 1][b - 1] == 1) inv[a - 1] = b;
    for (int gidx = 1; gidx <= 24; ++gidx)
        for (int h : ids) {
            const int ghg = t[t[gidx - 1][h - 1] - 1][inv[gidx - 1] - 1];
            if (std::find(ids.begin(), ids.end(), ghg) == ids.end()) return false;
        }
    return true;
}

Mat3 oriented_op(double gamma, int s) {
    Mat3 m = Mat3::identity();
    m(0, 0) = std::cos(gamma);
    m(0, 1) = -s * std::sin(gamma);
    m(1, 0) = std::sin(gamma);
    m(1, 1) = s * std::cos(gamma);
    return m;
}

namespace {

// deterministic invariance test grid
const std::vector<Vec3>& symmetry_grid() {
    static const std::vector<Vec3> grid = [] {
        std::vector<Vec3> g;
        const int nlat = 48, nlon = 96;
        for (int i = 0; i < nlat; ++i) {
            const double t1 = -kPi / 2.0 + (i + 0.5) * kPi / nlat;
            for (int j = 0; j < nlon; ++j) {
                const double t2 = -kPi + (j + 0.5) * 2.0 * kPi / nlon;
                g.push_back(SphericalPoint{t1, t2}.cartesian());
            }
        }
        return g;
    }();
    return grid;
}

double invariance_dev(const OctupolarTensor& t, const Mat3& m) {
    double dev = 0.0;
    for (const Vec3& x : symmetry_grid())
        dev = std::max(dev, std::abs(potential(t, m * x) - potential(t, x)));
    return dev;
}

double golden_refine(const OctupolarTensor& t, int s, double lo, double hi) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = invariance_dev(t, oriented_op(c, s));
    double fd = invariance_dev(t, oriented_op(d, s));
    while (b - a > 1e-12) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = invariance_dev(t, oriented_op(c, s));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = invariance_dev(t, oriented_op(d, s));
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

SymmetryReport detect_symmetry(const OrientedParams& p) {
    const OctupolarTensor t = from_cylinder(p);
    const double tol = 1e-10;
    SymmetryReport rep;

    // candidate angles: the stratum values plus a coarse scan refined wherever
    // the deviation dips (guards against transcription drift in the tables)
    const double chi = wrap_pi(p.chi);
    std::vector<std::pair<double, int>> candidates;
    for (double g : {2.0 * kPi / 3.0, -2.0 * kPi / 3.0, kPi}) candidates.push_back({g, 1});
    for (double g : {kPi, kPi / 3.0, -kPi / 3.0, std::atan2(-std::cos(chi), -std::sin(chi)),
                     std::atan2(std::cos(chi), std::sin(chi))})
        candidates.push_back({g, -1});
    const int nscan = 720;
    for (int s : {1, -1}) {
        std::vector<double> dev(nscan);
        for (int i = 0; i < nscan; ++i)
            dev[i] = invariance_dev(t, oriented_op(2.0 * kPi * i / nscan, s));
        for (int i = 0; i < nscan; ++i) {
            const double dm = dev[(i + nscan - 1) % nscan], dp = dev[(i + 1) % nscan];
            if (dev[i] < 0.05 && dev[i] <= dm && dev[i] <= dp) {
                const double g0 = 2.0 * kPi * i / nscan;
                candidates.push_back({golden_refine(t, s, g0 - kPi / nscan, g0 + kPi / nscan), s});
            }
        }
    }

    int n_rot = 0, n_ref = 0, n_rot_scan = 0;
    for (auto [g, s] : candidates) {
        const double gw = wrap_pi(g);
        if (s == 1 && std::abs(gw) < 1e-9) continue;  // identity
        bool dup = false;
        for (const auto& op : rep.ops)
            if (op.s == s && std::abs(wrap_pi(op.gamma - gw)) < 1e-8) {
                dup = true;
                break;
            }
        if (dup) continue;
        if (invariance_dev(t, oriented_op(gw, s)) >= tol) continue;
        rep.ops.push_back({gw, s});
        if (s == 1)
            ++n_rot;
        else {
            ++n_ref;
            double delta = wrap_pi(gw) / 2.0;
            if (delta < 0) delta += kPi;
            rep.reflection_plane_angles.push_back(delta);
        }
    }
    // O(2) probe: a handful of irrational rotation angles
    n_rot_scan = 0;
    for (double g : {0.7, 1.3, 2.1, 2.9, 4.2, 5.5})
        if (invariance_dev(t, oriented_op(g, 1)) < tol) ++n_rot_scan;
    rep.o2_family = n_rot_scan == 6;

    // full tetrahedral check
    bool td = true;
    for (const GroupElement& e : td_elements())
        if (invariance_dev(t, e.matrix) >= tol) {
            td = false;
            break;
        }
    if (td) {
        rep.group_name = "Td";
        for (const GroupElement& e : td_elements()) rep.td_ids.push_back(e.id);
        return rep;
    }
    for (const auto& op : rep.ops) {
        Mat3 m = oriented_op(op.gamma, op.s);
        for (const GroupElement& e : td_elements())
            if (m.max_abs_diff(e.matrix) < 1e-9) {
                rep.td_ids.push_back(e.id);
                break;
            }
    }

    if (rep.o2_family)
        rep.group_name = "Dinfh";
    else if (n_rot >= 2 && n_ref >= 3)
        rep.group_name = "D3h";
    else if (n_rot == 1 && n_ref == 2)
        rep.group_name = "D2h";
    else if (n_ref == 1)
        rep.group_name = "Dh";
    else if (n_rot >= 2)
        rep.group_name = "C3";
    else
        rep.group_name = "e";
    return rep;
}

}  // namespace octupolar
