#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace anglevol
{

/// Permutation of the tetrahedron vertices {0, 1, 2, 3}: v -> perm[v].
using Perm4 = std::array<int, 4>;

Perm4 inverse(const Perm4& p);
bool is_permutation(const Perm4& p);

/// Face `face` (opposite vertex `face`) of some tet is glued to tet
/// `target`, sending vertex v to vertex perm[v]. The target face is
/// perm[face].
struct Gluing
{
    int target = -1;
    Perm4 perm{};
    bool operator==(const Gluing&) const = default;
};

/// One line of the file format.
struct GluingRecord
{
    int tet = 0;
    int face = 0;
    int target = 0;
    Perm4 perm{};
};

/// Edge `slot` (tet_angle slot order) of tetrahedron `tet`.
struct TetEdge
{
    int tet = 0;
    int slot = 0;
    bool operator==(const TetEdge&) const = default;
};

struct TetVertex
{
    int tet = 0;
    int vertex = 0;
    bool operator==(const TetVertex&) const = default;
};

struct EdgeClass
{
    int id = 0;
    std::vector<TetEdge> members;
    [[nodiscard]] int valence() const { return static_cast<int>(members.size()); }
};

struct VertexClass
{
    int id = 0;
    std::vector<TetVertex> members;
    /// Euler characteristic of the link, triangulated by one triangle per
    /// member corner.
    int link_euler = 0;
};

/// A closed 3-dimensional triangulation given by face gluings.
///
/// Construction validates that every face is glued exactly once, that the
/// two records of each gluing carry mutually inverse permutations, and
/// that no face is glued to itself; the edge and vertex orbits are computed
/// then. It is immutable afterwards.
class Triangulation
{
public:
    /// Throws UngluedFace or GluingInconsistency.
    static Triangulation from_gluings(int n_tets,
                                      const std::vector<GluingRecord>& records);

    /// Parses the `anglevol-tri v1` text format and validates it, including
    /// vertex links. Throws SyntaxError, UngluedFace, GluingInconsistency or
    /// BadLink.
    static Triangulation parse(std::string_view text);

    /// Canonical text: header, then one record per (tet, face) in order.
    [[nodiscard]] std::string serialize() const;

    [[nodiscard]] int n_tets() const { return n_tets_; }
    [[nodiscard]] const Gluing& gluing(int tet, int face) const
    {
        return gluings_[4 * tet + face];
    }

    [[nodiscard]] const std::vector<EdgeClass>& edge_classes() const
    {
        return edge_classes_;
    }
    [[nodiscard]] int edge_class_of(int tet, int slot) const
    {
        return edge_class_of_[6 * tet + slot];
    }
    [[nodiscard]] const std::vector<VertexClass>& vertex_classes() const
    {
        return vertex_classes_;
    }
    [[nodiscard]] int vertex_class_of(int tet, int vertex) const
    {
        return vertex_class_of_[4 * tet + vertex];
    }

    [[nodiscard]] int n_faces() const { return 2 * n_tets_; }
    [[nodiscard]] bool is_one_vertex() const { return vertex_classes_.size() == 1; }
    /// All vertex links are spheres and no edge is glued to itself
    /// reversed.
    [[nodiscard]] bool is_closed_manifold() const;
    /// Some edge class identified with itself in reverse, or -1.
    [[nodiscard]] int reversed_edge_class() const { return reversed_edge_; }

private:
    Triangulation() = default;

    int n_tets_ = 0;
    std::vector<Gluing> gluings_;
    std::vector<EdgeClass> edge_classes_;
    std::vector<int> edge_class_of_;
    std::vector<VertexClass> vertex_classes_;
    std::vector<int> vertex_class_of_;
    int reversed_edge_ = -1;
};

/// Edge orbits of T (also cached on the object).
const std::vector<EdgeClass>& edge_classes(const Triangulation& t);

/// Vertex orbits with link Euler characteristics. Throws BadLink naming
/// the first vertex class whose link is not a sphere, or an edge class
/// glued to itself in reverse.
const std::vector<VertexClass>& vertex_classes_and_links(const Triangulation& t);

/// Boundary of the 4-simplex: five tetrahedra, tet t spanning the simplex
/// vertices other than t.
Triangulation five_cell();

}  // namespace anglevol
