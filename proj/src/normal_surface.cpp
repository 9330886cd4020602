#include "anglevol/normal_surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "anglevol/errors.hpp"

namespace anglevol
{

namespace
{

constexpr double kGaussBonnetTol = 1e-6;
constexpr double kVertexSumTol = 1e-6;

std::array<int, 3> others(int i)
{
    std::array<int, 3> out{};
    int n = 0;
    for (int v = 0; v < 4; ++v) {
        if (v != i) out[n++] = v;
    }
    return out;
}

// Face of the tet containing the edges in slots s1 and s2 (which share a
// vertex): the face opposite the vertex on neither edge.
int common_face(int s1, int s2)
{
    std::array<bool, 4> used{};
    for (int v : kSlotVertices[s1]) used[v] = true;
    for (int v : kSlotVertices[s2]) used[v] = true;
    for (int v = 0; v < 4; ++v) {
        if (!used[v]) return v;
    }
    throw InternalConsistency("slots do not span a face");
}

NormalDisk make_disk(int tet, LongEdgeSet::TetPattern pattern, std::array<int, 2> verts)
{
    NormalDisk d;
    d.tet = tet;
    if (pattern == LongEdgeSet::TetPattern::VertexTriple) {
        d.kind = DiskKind::Triangle;
        const int i = verts[0];
        for (int w : others(i)) d.corners.push_back(edge_slot(i, w));
    } else {
        d.kind = DiskKind::Quad;
        const int a = verts[0], b = verts[1];
        std::array<int, 2> cd{};
        int n = 0;
        for (int v = 0; v < 4; ++v) {
            if (v != a && v != b) cd[n++] = v;
        }
        const int c = cd[0], e = cd[1];
        d.corners = {edge_slot(a, c), edge_slot(a, e), edge_slot(b, e), edge_slot(b, c)};
    }
    const auto k = d.corners.size();
    for (std::size_t m = 0; m < k; ++m) {
        d.side_faces.push_back(common_face(d.corners[m], d.corners[(m + 1) % k]));
    }
    return d;
}

class DisjointSets
{
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int a)
    {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

LongEdgeSet LongEdgeSet::from_classes(const Triangulation& t, std::vector<int> classes)
{
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<bool> in_x(t.edge_classes().size(), false);
    for (int c : classes) {
        if (c < 0 || c >= static_cast<int>(in_x.size())) {
            throw PatternViolation("edge class " + std::to_string(c) + " does not exist");
        }
        in_x[c] = true;
    }

    LongEdgeSet out;
    out.classes = std::move(classes);
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        std::array<bool, 6> mask{};
        int count = 0;
        for (int s = 0; s < 6; ++s) {
            mask[s] = in_x[t.edge_class_of(tet, s)];
            count += mask[s];
        }
        TetPattern pattern = TetPattern::Empty;
        std::array<int, 2> verts{-1, -1};
        bool ok = count == 0;
        if (count == 3) {
            for (int i = 0; i < 4 && !ok; ++i) {
                const auto o = others(i);
                if (mask[edge_slot(i, o[0])] && mask[edge_slot(i, o[1])] && mask[edge_slot(i, o[2])]) {
                    pattern = TetPattern::VertexTriple;
                    verts = {i, -1};
                    ok = true;
                }
            }
        } else if (count == 4) {
            for (int j = 1; j < 4 && !ok; ++j) {
                const int s = edge_slot(0, j);
                if (!mask[s] && !mask[opposite_slot(s)]) {
                    pattern = TetPattern::OppositePairs;
                    verts = {0, j};
                    ok = true;
                }
            }
        }
        if (!ok) {
            throw PatternViolation("tet " + std::to_string(tet) + " meets X in " +
                                   std::to_string(count) +
                                   " edges that are neither a vertex triple nor two opposite pairs");
        }
        out.pattern.push_back(pattern);
        out.pattern_vertices.push_back(verts);
    }
    return out;
}

std::vector<double> edge_class_lengths(const Triangulation& t, const AngleAssignment& x)
{
    std::vector<double> sum(t.edge_classes().size(), 0.0);
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        const TetLengths l = edge_lengths3(x.tet(tet));
        for (int s = 0; s < 6; ++s) sum[t.edge_class_of(tet, s)] += l[s];
    }
    for (const auto& ec : t.edge_classes()) sum[ec.id] /= ec.valence();
    return sum;
}

LongEdgeSet long_edge_set(const Triangulation& t, const AngleAssignment& x, double tol)
{
    const auto lengths = edge_class_lengths(t, x);
    std::vector<int> classes;
    for (std::size_t c = 0; c < lengths.size(); ++c) {
        if (lengths[c] >= kPi - tol) classes.push_back(static_cast<int>(c));
    }
    return LongEdgeSet::from_classes(t, std::move(classes));
}

SurfaceComplex build_surface(const Triangulation& t, const LongEdgeSet& x_set)
{
    SurfaceComplex s;
    std::vector<int> disk_of(t.n_tets(), -1);
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        if (x_set.pattern[tet] == LongEdgeSet::TetPattern::Empty) continue;
        disk_of[tet] = static_cast<int>(s.disks.size());
        s.disks.push_back(make_disk(tet, x_set.pattern[tet], x_set.pattern_vertices[tet]));
    }

    // Corner ids: running offset per disk.
    std::vector<int> corner_base;
    int n_corners = 0;
    for (const auto& d : s.disks) {
        corner_base.push_back(n_corners);
        n_corners += static_cast<int>(d.corners.size());
    }
    DisjointSets corners(n_corners);

    auto corner_on = [](const NormalDisk& d, int slot) {
        const auto it = std::find(d.corners.begin(), d.corners.end(), slot);
        return it == d.corners.end() ? -1 : static_cast<int>(it - d.corners.begin());
    };
    auto map_slot = [](const Perm4& p, int slot) {
        const auto [a, b] = kSlotVertices[slot];
        return edge_slot(p[a], p[b]);
    };

    std::map<std::array<int, 2>, bool> paired;  // (disk, side) already matched
    for (int da = 0; da < static_cast<int>(s.disks.size()); ++da) {
        const NormalDisk& a = s.disks[da];
        const int k = static_cast<int>(a.corners.size());
        for (int side = 0; side < k; ++side) {
            if (paired.count({da, side})) continue;
            const int face = a.side_faces[side];
            const Gluing& g = t.gluing(a.tet, face);
            const int db = disk_of[g.target];
            const int s1 = map_slot(g.perm, a.corners[side]);
            const int s2 = map_slot(g.perm, a.corners[(side + 1) % k]);
            if (db < 0) {
                throw GluingMismatch("disk in tet " + std::to_string(a.tet) + " has a side in face " +
                                     std::to_string(face) + " but tet " + std::to_string(g.target) +
                                     " carries no disk");
            }
            const NormalDisk& b = s.disks[db];
            const int c1 = corner_on(b, s1), c2 = corner_on(b, s2);
            const int kb = static_cast<int>(b.corners.size());
            int side_b = -1;
            if (c1 >= 0 && c2 >= 0) {
                if ((c1 + 1) % kb == c2) side_b = c1;
                else if ((c2 + 1) % kb == c1) side_b = c2;
            }
            if (side_b < 0 || b.side_faces[side_b] != g.perm[face]) {
                throw GluingMismatch("disk side of tet " + std::to_string(a.tet) + " in face " +
                                     std::to_string(face) + " has no matching side in tet " +
                                     std::to_string(g.target));
            }
            if (paired.count({db, side_b}) && !(db == da && side_b == side)) {
                throw GluingMismatch("disk side matched twice");
            }
            paired[{da, side}] = true;
            paired[{db, side_b}] = true;
            s.arcs.push_back({da, side, db, side_b});
            corners.unite(corner_base[da] + side, corner_base[db] + c1);
            corners.unite(corner_base[da] + (side + 1) % k, corner_base[db] + c2);
        }
    }

    // Group corners into cycles; each X class must give exactly one.
    std::map<int, int> root_to_point;
    for (int d = 0; d < static_cast<int>(s.disks.size()); ++d) {
        const auto& disk = s.disks[d];
        for (int c = 0; c < static_cast<int>(disk.corners.size()); ++c) {
            const int root = corners.find(corner_base[d] + c);
            auto [it, fresh] = root_to_point.try_emplace(root, static_cast<int>(s.edge_points.size()));
            if (fresh) {
                s.edge_points.push_back({t.edge_class_of(disk.tet, disk.corners[c]), {}});
            }
            s.edge_points[it->second].corners.push_back({d, c});
        }
    }
    std::map<int, int> cycles_per_class;
    for (const auto& p : s.edge_points) ++cycles_per_class[p.edge_class];
    for (int c : x_set.classes) {
        if (cycles_per_class[c] != 1) {
            throw GluingMismatch("corners around edge class " + std::to_string(c) + " form " +
                                 std::to_string(cycles_per_class[c]) + " cycles (expected 1)");
        }
    }
    return s;
}

int euler_characteristic(const SurfaceComplex& s)
{
    return s.n_vertices() - s.n_edges() + s.n_faces();
}

GaussBonnetReport gauss_bonnet_check(const SurfaceComplex& s, const AngleAssignment& x)
{
    GaussBonnetReport r;
    r.min_triangle_excess = std::numeric_limits<double>::infinity();
    r.min_quad_excess = std::numeric_limits<double>::infinity();
    auto angle = [&](const NormalDisk& d, int c) { return x.x(6 * d.tet + d.corners[c]); };

    double curvature = 0.0;
    for (std::size_t i = 0; i < s.disks.size(); ++i) {
        const auto& d = s.disks[i];
        double sum = 0.0;
        for (std::size_t c = 0; c < d.corners.size(); ++c) sum += angle(d, static_cast<int>(c));
        const double k = static_cast<double>(d.corners.size());
        curvature += sum - (k - 2.0) * kPi;
        if (d.kind == DiskKind::Triangle) {
            r.min_triangle_excess = std::min(r.min_triangle_excess, sum - kPi);
            if (!(sum > kPi)) {
                throw AngleConditionViolated("triangle disk in tet " + std::to_string(d.tet) +
                                             " has angle sum " + std::to_string(sum) + " <= pi");
            }
        } else {
            r.min_quad_excess = std::min(r.min_quad_excess, sum - kTwoPi);
            if (!(sum > kTwoPi)) {
                throw AngleConditionViolated("quad disk in tet " + std::to_string(d.tet) +
                                             " has angle sum " + std::to_string(sum) + " <= 2 pi");
            }
        }
    }
    for (const auto& p : s.edge_points) {
        double sum = 0.0;
        for (const auto& [d, c] : p.corners) sum += angle(s.disks[d], c);
        const double residual = std::abs(sum - kTwoPi);
        r.max_vertex_residual = std::max(r.max_vertex_residual, residual);
        if (residual > kVertexSumTol) {
            throw AngleConditionViolated("angles around the surface vertex on edge class " +
                                         std::to_string(p.edge_class) + " sum to " +
                                         std::to_string(sum));
        }
    }
    r.euler_from_angles = curvature / kTwoPi;
    const int chi = euler_characteristic(s);
    if (std::abs(r.euler_from_angles - chi) > kGaussBonnetTol) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "angle curvature gives chi = " << r.euler_from_angles << " but the complex has chi = "
            << chi;
        throw AngleConditionViolated(msg.str());
    }
    return r;
}

bool is_nonseparating(const Triangulation& t, const SurfaceComplex& s)
{
    if (!t.is_one_vertex()) {
        throw NotOneVertex("triangulation has " + std::to_string(t.vertex_classes().size()) +
                           " vertices; the non-separation test needs exactly one");
    }
    std::map<int, int> crossings;
    for (const auto& p : s.edge_points) ++crossings[p.edge_class];
    return std::any_of(crossings.begin(), crossings.end(),
                       [](const auto& kv) { return kv.second % 2 == 1; });
}

SurfaceReport extract_surface(const Triangulation& t, const AngleAssignment& x, double tol)
{
    const LongEdgeSet x_set = long_edge_set(t, x, tol);
    SurfaceReport r;
    r.long_classes = x_set.classes;
    if (x_set.empty()) return r;

    const SurfaceComplex s = build_surface(t, x_set);
    const GaussBonnetReport gb = gauss_bonnet_check(s, x);
    r.faces = s.n_faces();
    r.edges = s.n_edges();
    r.vertices = s.n_vertices();
    r.euler = euler_characteristic(s);
    r.euler_from_angles = gb.euler_from_angles;
    for (const auto& d : s.disks) (d.kind == DiskKind::Triangle ? r.triangles : r.quads)++;
    if (t.is_one_vertex()) r.nonseparating = is_nonseparating(t, s);
    return r;
}

}  // namespace anglevol
