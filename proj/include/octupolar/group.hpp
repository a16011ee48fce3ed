#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octupolar/math.hpp"
#include "octupolar/orientation.hpp"

namespace octupolar {

/// One element of the 24-element tetrahedral group representation.
/// Elements 13..24 are the improper half, M_{k+12} = M1m * M_k with
/// M1m = diag(-1, 1, 1).
struct GroupElement {
    Mat3 matrix;
    int det_sign = 1;
    int id = 1;  // 1-based, matching the multiplication table
};

/// The 24 matrices, entries built from exact radicals.
const std::vector<GroupElement>& td_elements();

/// tetrahedron vertices; every group element permutes them.
const std::array<Vec3, 4>& tetra_vertices();

using MulTable = std::array<std::array<int, 24>, 24>;

/// table[i][j] = id of M_{i+1} * M_{j+1}, recomputed from matrix products.
const MulTable& multiplication_table();

/// The table as transcribed from its published block form (P11 P12; P21 P22).
const MulTable& transcribed_multiplication_table();

struct Subgroup {
    std::string name;
    std::vector<int> ids;
    std::optional<Vec3> fixed_axis;  // unit vector of the fixed subspace, if 1-dimensional
};

/// G1..G8 with their fixed axes, plus the mixed-parity families Ga, Gb, Gc, Gd.
const std::vector<Subgroup>& subgroup_lattice();

bool is_closed(const std::vector<int>& ids);
bool is_normal(const std::vector<int>& ids);

/// An oriented orthogonal transformation: z fixed, O(2) in the (x, y) plane.
/// s = det; s = -1 is the reflection through the plane at angle gamma/2.
Mat3 oriented_op(double gamma, int s);

struct SymmetryReport {
    std::string group_name;  // e, Dh, C3, D3h, D2h, Dinfh, Td
    bool o2_family = false;  // full O(2) invariance (center stratum)
    struct Op {
        double gamma;
        int s;
    };
    std::vector<Op> ops;                       // nontrivial accepted operations
    std::vector<int> td_ids;                   // ops that coincide with T_d elements
    std::vector<double> reflection_plane_angles;  // plane angle delta in [0, pi)
};

/// Maximal invariance group of the oriented potential among oriented
/// orthogonal transformations (plus the full T_d check), detected on a fixed
/// deterministic grid at tolerance 1e-10.
SymmetryReport detect_symmetry(const OrientedParams& p);

}  // namespace octupolar
