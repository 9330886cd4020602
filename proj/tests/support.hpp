#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "anglevol/moduli_space.hpp"
#include "anglevol/tet_angle.hpp"
#include "anglevol/triangulation.hpp"

namespace testing
{

using namespace anglevol;

inline std::string data_path(const std::string& name)
{
    return std::string(ANGLEVOL_TEST_DATA) + "/" + name;
}

inline std::string read_file(const std::string& name)
{
    std::ifstream in(data_path(name));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Triangulation load(const std::string& name) { return Triangulation::parse(read_file(name)); }

/// Uniform rejection sample from AS(3) keeping min_slack away from the walls.
inline TetAngles random_as3(std::mt19937_64& rng, double min_slack = 0.02)
{
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (;;) {
        TetAngles x;
        for (auto& v : x.v) v = u(rng);
        if (in_AS3(x).min_slack >= min_slack) return x;
    }
}

/// Random AS(3) point of a given classification kind and type.
inline TetAngles random_as3_of(std::mt19937_64& rng, TetClass::Kind kind, GeometryType type,
                               double min_slack = 0.02)
{
    for (;;) {
        const TetAngles x = random_as3(rng, min_slack);
        const TetClass c = classify3(x);
        if (c.kind == kind && c.type == type) return x;
    }
}

/// Dihedral angles of the Euclidean tetrahedron with the given vertices,
/// from the inward face normals.
inline TetAngles euclidean_dihedrals(const std::array<Eigen::Vector3d, 4>& p)
{
    TetAngles x;
    for (int s = 0; s < 6; ++s) {
        const auto [i, j] = kSlotVertices[s];
        int k = -1, l = -1;
        for (int v = 0; v < 4; ++v) {
            if (v == i || v == j) continue;
            (k < 0 ? k : l) = v;
        }
        Eigen::Vector3d e = (p[j] - p[i]).normalized();
        Eigen::Vector3d a = p[k] - p[i];
        Eigen::Vector3d b = p[l] - p[i];
        a -= a.dot(e) * e;
        b -= b.dot(e) * e;
        x[s] = std::acos(std::clamp(a.normalized().dot(b.normalized()), -1.0, 1.0));
    }
    return x;
}

/// Euclidean tet with angle 2pi/3 on the edges at vertex 0 and
/// arccos(1/3)/2 on the opposite edges (apex over an equilateral base at
/// height sqrt(2)/4 of the circumradius).
inline TetAngles apex_euclidean_tet()
{
    TetAngles x;
    for (int s = 0; s < 6; ++s) x[s] = s < 3 ? 2.0 * kPi / 3.0 : 0.5 * regular_euclidean_angle();
    return x;
}

/// 5-cell critical point whose long edges are the four edges at vertex 0:
/// tets 1..4 (which contain vertex 0 as their local vertex 0) carry the
/// flip at 0 of the apex tet, tet 0 is regular Euclidean.
inline AngleAssignment five_cell_link_point()
{
    AngleAssignment x = AngleAssignment::uniform(5, volume_base_point());
    for (int t = 1; t < 5; ++t) x.set_tet(t, flip3(apex_euclidean_tet(), 0));
    return x;
}

}  // namespace testing
