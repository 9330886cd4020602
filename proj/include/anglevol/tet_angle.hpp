#pragma once

#include <array>
#include <string>

#include "anglevol/moebius_triangle.hpp"
#include "anglevol/trig.hpp"

namespace anglevol
{

/// Edge slots of a tetrahedron with vertices 0..3, in the fixed order
/// 01, 02, 03, 12, 13, 23. Opposite pairs are (01,23), (02,13), (03,12).
inline constexpr std::array<std::array<int, 2>, 6> kSlotVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Slot of edge {i, j}, i != j.
constexpr int edge_slot(int i, int j)
{
    if (i > j) std::swap(i, j);
    return i == 0 ? j - 1 : i + j;
}

/// Slot of the edge opposite `slot`.
constexpr int opposite_slot(int slot) { return 5 - slot; }

/// Six per-edge values of one tetrahedron, indexed by slot or vertex pair.
/// The tag keeps angles and lengths apart at compile time.
template <class Tag>
struct EdgeValues
{
    std::array<double, 6> v{};

    double& operator[](int slot) { return v[slot]; }
    double operator[](int slot) const { return v[slot]; }
    double& operator()(int i, int j) { return v[edge_slot(i, j)]; }
    double operator()(int i, int j) const { return v[edge_slot(i, j)]; }

    static EdgeValues constant(double value)
    {
        EdgeValues out;
        out.v.fill(value);
        return out;
    }
    bool operator==(const EdgeValues&) const = default;
};

struct AngleTag;
struct LengthTag;
/// Dihedral angles of one tetrahedron.
using TetAngles = EdgeValues<AngleTag>;
/// Moebius edge lengths of one tetrahedron.
using TetLengths = EdgeValues<LengthTag>;

/// Dihedral angle of the regular Euclidean tetrahedron, arccos(1/3). The
/// volume is normalized to vanish at the all-base-angle structure.
double regular_euclidean_angle();
TetAngles volume_base_point();

struct AS3Membership
{
    bool inside = false;
    /// Smallest margin over the 16 vertex inequalities and 12 box bounds;
    /// negative outside.
    double min_slack = 0.0;
};

/// Membership in AS(3): x in (0, pi)^6 and, at every vertex i,
/// x_ij + x_ik + x_il > pi and x_ij + x_ik - x_il < pi (all rotations).
AS3Membership in_AS3(const TetAngles& x);

/// Face angles y^i_{jk}: entry [i][l] is the angle at vertex i of the face
/// opposite vertex l (diagonal unused).
struct FaceAngles
{
    std::array<std::array<double, 4>, 4> at{};
};

/// Throws NonSphericalVertex if a vertex triple is not spherical.
FaceAngles face_angles(const TetAngles& x);

/// Length agreement tolerance between the two faces adjacent to an edge.
inline constexpr double kCompatibilityTol = 1e-9;

/// Moebius edge lengths, each computed from both adjacent faces and checked
/// for agreement. Throws CompatibilityViolation on disagreement.
TetLengths edge_lengths3(const TetAngles& x);

struct VolumeOptions
{
    double abs_tol = 1e-12;
    int max_intervals = 1 << 14;
};

/// Integral of (1/2) sum l_ij dx_ij along the straight segment from -> to.
/// Both endpoints must lie in AS(3). Throws QuadratureFailure if the panel
/// budget is exhausted before the tolerance is met.
double schlafli_line_integral(const TetAngles& from, const TetAngles& to,
                              const VolumeOptions& opts = {});

/// Generalized volume: the Schlafli integral from the regular Euclidean
/// point to x.
double tet_volume(const TetAngles& x, const VolumeOptions& opts = {});

/// dV/dx_ij = l_ij / 2.
TetLengths tet_volume_gradient(const TetAngles& x);

/// i-th flip: edges at vertex i keep their angle, the opposite three are
/// replaced by pi - angle.
TetAngles flip3(const TetAngles& x, int i);

/// Classification of an angle structure on a tetrahedron.
struct TetClass
{
    enum class Kind { Classical, SingleFlip, DoubleFlip };

    Kind kind = Kind::Classical;
    GeometryType type = GeometryType::Euclidean;
    /// SingleFlip: vertices[0] is the flipped vertex.
    /// DoubleFlip: {vertices[0], vertices[1]} with vertices[0] == 0, so the
    /// long edges are those joining {v0, v1} to the other two vertices.
    std::array<int, 2> vertices{-1, -1};

    [[nodiscard]] bool is_classical() const { return kind == Kind::Classical; }
    [[nodiscard]] std::string describe() const;
    bool operator==(const TetClass&) const = default;
};

/// Classify from precomputed lengths. Throws UnclassifiablePattern if the
/// signs of the lengths fit no case.
TetClass classify_lengths3(const TetLengths& l);

TetClass classify3(const TetAngles& x);

/// Angle sums over the three ways of choosing two opposite-edge pairs:
/// {01,23}+{02,13}, {01,23}+{03,12}, {02,13}+{03,12}.
std::array<double, 3> opposite_pair_angle_sums(const TetAngles& x);

}  // namespace anglevol
