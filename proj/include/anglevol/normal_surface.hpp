#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "anglevol/moduli_space.hpp"
#include "anglevol/triangulation.hpp"

namespace anglevol
{

/// Membership threshold for X: common length >= pi - tol.
inline constexpr double kLongEdgeTol = 1e-7;

/// Edge classes of length at least pi, with the induced per-tet pattern.
struct LongEdgeSet
{
    enum class TetPattern { Empty, VertexTriple, OppositePairs };

    std::vector<int> classes;
    std::vector<TetPattern> pattern;
    /// VertexTriple: {vertex, -1}. OppositePairs: {0, j}, the pair of
    /// vertices separated from the other two by the quad.
    std::vector<std::array<int, 2>> pattern_vertices;

    [[nodiscard]] bool empty() const { return classes.empty(); }

    /// Validates the per-tet trichotomy: no long edge, the three edges at
    /// one vertex, or two pairs of opposite edges. Throws PatternViolation.
    static LongEdgeSet from_classes(const Triangulation& t, std::vector<int> classes);
};

/// Common Moebius length of each edge class (mean over member corners).
std::vector<double> edge_class_lengths(const Triangulation& t, const AngleAssignment& x);

/// X at a critical point: classes of common length >= pi - tol.
LongEdgeSet long_edge_set(const Triangulation& t, const AngleAssignment& x,
                          double tol = kLongEdgeTol);

enum class DiskKind { Triangle, Quad };

/// A normal disk in one tet. Corners lie on the slots in `corners`, in
/// cyclic order; side k joins corner k to corner k+1 and lies in face
/// `side_faces[k]`.
struct NormalDisk
{
    int tet = 0;
    DiskKind kind = DiskKind::Triangle;
    std::vector<int> corners;
    std::vector<int> side_faces;
};

/// Two disk sides identified across a face gluing.
struct Arc
{
    int disk_a = 0, side_a = 0;
    int disk_b = 0, side_b = 0;
};

/// A surface vertex: one cycle of disk corners around an X edge class.
struct EdgePoint
{
    int edge_class = 0;
    /// (disk index, corner index) pairs.
    std::vector<std::array<int, 2>> corners;
};

struct SurfaceComplex
{
    std::vector<NormalDisk> disks;
    std::vector<Arc> arcs;
    std::vector<EdgePoint> edge_points;

    [[nodiscard]] int n_faces() const { return static_cast<int>(disks.size()); }
    [[nodiscard]] int n_edges() const { return static_cast<int>(arcs.size()); }
    [[nodiscard]] int n_vertices() const { return static_cast<int>(edge_points.size()); }
};

/// Builds one normal disk per tet meeting X and glues them. Throws
/// GluingMismatch if a disk side has no partner across its face, or if the
/// corners around an X class do not close into a single cycle.
SurfaceComplex build_surface(const Triangulation& t, const LongEdgeSet& x_set);

/// V - E + F.
int euler_characteristic(const SurfaceComplex& s);

struct GaussBonnetReport
{
    /// Sum over disks of (corner angle sum - (k - 2) pi), divided by 2 pi.
    double euler_from_angles = 0.0;
    /// Largest |sum of corner angles - 2 pi| over the surface vertices.
    double max_vertex_residual = 0.0;
    double min_triangle_excess = 0.0;  ///< min (angle sum - pi); +inf if none
    double min_quad_excess = 0.0;      ///< min (angle sum - 2 pi); +inf if none
};

/// Recomputes 2 pi chi from the dihedral angles of x used as corner angles
/// and checks the three angle conditions. Throws AngleConditionViolated
/// naming the offending cell, or if the angle count disagrees with chi by
/// more than 1e-6.
GaussBonnetReport gauss_bonnet_check(const SurfaceComplex& s, const AngleAssignment& x);

/// True iff some edge class is crossed an odd number of times. Requires a
/// one-vertex triangulation (throws NotOneVertex otherwise).
bool is_nonseparating(const Triangulation& t, const SurfaceComplex& s);

struct SurfaceReport
{
    int faces = 0;
    int edges = 0;
    int vertices = 0;
    int euler = 0;
    double euler_from_angles = 0.0;
    int triangles = 0;
    int quads = 0;
    std::vector<int> long_classes;
    /// Set only for one-vertex triangulations.
    std::optional<bool> nonseparating;
};

/// Runs the whole extraction at a critical point with nonempty X.
SurfaceReport extract_surface(const Triangulation& t, const AngleAssignment& x,
                              double tol = kLongEdgeTol);

}  // namespace anglevol
