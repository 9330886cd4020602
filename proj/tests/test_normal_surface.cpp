#include <doctest.h>

#include "anglevol/errors.hpp"
#include "anglevol/normal_surface.hpp"
#include "support.hpp"

using namespace anglevol;

namespace
{
// Edge classes of the 5-cell that contain simplex vertex 0: in tet 1 the
// local vertex 0 is global 0.
std::vector<int> classes_at_vertex0(const Triangulation& t)
{
    std::vector<int> out;
    for (int w = 1; w < 4; ++w) out.push_back(t.edge_class_of(1, edge_slot(0, w)));
    out.push_back(t.edge_class_of(2, edge_slot(0, 1)));  // global edge 01
    return out;
}
}  // namespace

TEST_CASE("long edge set")
{
    const Triangulation t = five_cell();
    CHECK(long_edge_set(t, AngleAssignment::uniform(5, TetAngles::constant(2 * kPi / 3))).empty());

    const LongEdgeSet x = long_edge_set(t, testing::five_cell_link_point());
    CHECK(x.classes.size() == 4);
    CHECK(x.pattern[0] == LongEdgeSet::TetPattern::Empty);
    for (int k = 1; k < 5; ++k) {
        CHECK(x.pattern[k] == LongEdgeSet::TetPattern::VertexTriple);
        CHECK(x.pattern_vertices[k][0] == 0);
    }
    std::vector<int> expect = classes_at_vertex0(t);
    std::sort(expect.begin(), expect.end());
    CHECK(x.classes == expect);
}

TEST_CASE("pattern validation")
{
    const Triangulation t = five_cell();
    CHECK_THROWS_AS(LongEdgeSet::from_classes(t, {t.edge_class_of(0, 0)}), PatternViolation);
    CHECK_THROWS_AS(LongEdgeSet::from_classes(t, {99}), PatternViolation);

    // Two opposite pairs in both tets of the one-vertex fixture.
    const Triangulation ov = testing::load("one_vertex.tri");
    const LongEdgeSet x = LongEdgeSet::from_classes(ov, {0, 2});
    for (int k = 0; k < 2; ++k) {
        CHECK(x.pattern[k] == LongEdgeSet::TetPattern::OppositePairs);
        CHECK(x.pattern_vertices[k][0] == 0);
        const int j = x.pattern_vertices[k][1];
        // The quad separates {0, j}: edges 0j and its opposite stay short.
        CHECK(ov.edge_class_of(k, edge_slot(0, j)) == 1);
        CHECK(ov.edge_class_of(k, opposite_slot(edge_slot(0, j))) == 1);
    }
}

TEST_CASE("vertex link surface of the five-cell")
{
    const Triangulation t = five_cell();
    const LongEdgeSet x = LongEdgeSet::from_classes(t, classes_at_vertex0(t));
    const SurfaceComplex s = build_surface(t, x);
    CHECK(s.n_faces() == 4);
    CHECK(s.n_edges() == 6);
    CHECK(s.n_vertices() == 4);
    CHECK(euler_characteristic(s) == 2);
    for (const auto& d : s.disks) CHECK(d.kind == DiskKind::Triangle);
    for (const auto& p : s.edge_points) CHECK(p.corners.size() == 3);

    const GaussBonnetReport gb = gauss_bonnet_check(s, testing::five_cell_link_point());
    CHECK(std::abs(gb.euler_from_angles - 2.0) < 1e-6);
    CHECK(gb.max_vertex_residual < 1e-12);
    CHECK(gb.min_triangle_excess == doctest::Approx(kPi));

    // The symmetric spherical point satisfies the angle conditions as well.
    const auto sym = AngleAssignment::uniform(5, TetAngles::constant(2 * kPi / 3));
    CHECK(std::abs(gauss_bonnet_check(s, sym).euler_from_angles - 2.0) < 1e-12);

    // At the base point the angles around a surface vertex sum to 3 arccos(1/3).
    CHECK_THROWS_AS(gauss_bonnet_check(s, AngleAssignment::uniform(5, volume_base_point())),
                    AngleConditionViolated);

    CHECK_THROWS_AS(is_nonseparating(t, s), NotOneVertex);
}

TEST_CASE("surface in a one-vertex triangulation")
{
    const Triangulation ov = testing::load("one_vertex.tri");
    const SurfaceComplex s = build_surface(ov, LongEdgeSet::from_classes(ov, {0, 2}));
    CHECK(s.n_faces() == 2);
    for (const auto& d : s.disks) CHECK(d.kind == DiskKind::Quad);
    CHECK(s.n_edges() == 4);
    CHECK(s.n_vertices() == 2);
    CHECK(euler_characteristic(s) == 0);
    CHECK(is_nonseparating(ov, s));

    // Quads with angle sum exactly 2 pi violate the strict quad condition.
    const FeasibilityResult lp = feasible_interior(build_polytope(ov));
    CHECK_THROWS_AS(gauss_bonnet_check(s, lp.point), AngleConditionViolated);

    CHECK_FALSE(is_nonseparating(ov, SurfaceComplex{}));
}

TEST_CASE("gluing mismatch")
{
    // Only one of the two tets around a shared face carries a disk.
    const Triangulation t = five_cell();
    LongEdgeSet x = LongEdgeSet::from_classes(t, classes_at_vertex0(t));
    x.pattern[2] = LongEdgeSet::TetPattern::Empty;
    CHECK_THROWS_AS(build_surface(t, x), GluingMismatch);
}

TEST_CASE("surface report")
{
    const Triangulation t = five_cell();
    const SurfaceReport r = extract_surface(t, testing::five_cell_link_point());
    CHECK(r.faces == 4);
    CHECK(r.edges == 6);
    CHECK(r.vertices == 4);
    CHECK(r.euler == 2);
    CHECK(r.triangles == 4);
    CHECK(r.quads == 0);
    CHECK(std::abs(r.euler_from_angles - 2.0) < 1e-6);
    CHECK_FALSE(r.nonseparating.has_value());

    const SurfaceReport empty =
        extract_surface(t, AngleAssignment::uniform(5, TetAngles::constant(2 * kPi / 3)));
    CHECK(empty.long_classes.empty());
    CHECK(empty.faces == 0);
}
