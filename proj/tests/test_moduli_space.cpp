#include <doctest.h>

#include <random>

#include "anglevol/moduli_space.hpp"
#include "support.hpp"

using namespace anglevol;

TEST_CASE("angle assignment layout")
{
    AngleAssignment x = AngleAssignment::uniform(3, TetAngles::constant(1.0));
    CHECK(x.n_tets() == 3);
    TetAngles a = TetAngles::constant(2.0);
    a[4] = 0.5;
    x.set_tet(1, a);
    CHECK(x.x(6 + 4) == 0.5);
    CHECK(x.tet(1) == a);
    CHECK(x.tet(2) == TetAngles::constant(1.0));
}

TEST_CASE("five-cell polytope")
{
    const Triangulation t = five_cell();
    const ModuliPolytope p = build_polytope(t);
    CHECK(p.E.rows() == 10);
    CHECK(p.E.cols() == 30);
    for (int r = 0; r < 10; ++r) {
        CHECK(p.E.row(r).sum() == 3.0);
        CHECK(p.E.row(r).cwiseAbs().maxCoeff() == 1.0);
        CHECK(p.e_rhs(r) == doctest::Approx(2 * kPi));
    }
    CHECK(p.G.rows() == ModuliPolytope::kRowsPerTet * 5);
    CHECK(p.dimension() == 30);
    CHECK(p.row_basis.cols() == 10);

    const AngleAssignment sym = AngleAssignment::uniform(5, TetAngles::constant(2 * kPi / 3));
    CHECK(p.equality_residual(sym.x) < 1e-14);
    CHECK(p.slack(sym.x) == doctest::Approx(kPi / 3));
    // Slack agrees with the per-tet membership test.
    std::mt19937_64 rng(4);
    for (int n = 0; n < 50; ++n) {
        const TetAngles a = testing::random_as3(rng, 0.0);
        CHECK(p.slack(AngleAssignment::uniform(5, a).x) == doctest::Approx(in_AS3(a).min_slack));
    }
}

TEST_CASE("max-slack interior point")
{
    const ModuliPolytope p = build_polytope(five_cell());
    const FeasibilityResult r = feasible_interior(p);
    CHECK(r.feasible);
    CHECK(r.slack >= kPi / 3 - 1e-9);
    CHECK(p.slack(r.point.x) == doctest::Approx(r.slack));
    CHECK(p.equality_residual(r.point.x) < 1e-12);

    const Triangulation ov = testing::load("one_vertex.tri");
    const ModuliPolytope q = build_polytope(ov);
    const FeasibilityResult s = feasible_interior(q);
    CHECK(s.feasible);
    CHECK(q.equality_residual(s.point.x) < 1e-12);
    CHECK(q.slack(s.point.x) > 0.0);

    // A valence-2 edge needs two angles below pi summing to 2 pi.
    CHECK_FALSE(feasible_interior(build_polytope(testing::load("infeasible.tri"))).feasible);
}

TEST_CASE("contradictory equalities are infeasible")
{
    Eigen::MatrixXd E(2, 2);
    E << 1, 1, 1, 1;
    Eigen::VectorXd e(2);
    e << 1, 2;
    Eigen::MatrixXd G = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd h = Eigen::VectorXd::Zero(2);
    const ModuliPolytope p = ModuliPolytope::from_constraints(E, e, G, h);
    CHECK_FALSE(feasible_interior(p).feasible);

    e << 1, 1;
    const ModuliPolytope consistent = ModuliPolytope::from_constraints(E, e, G, h);
    CHECK(consistent.row_basis.cols() == 1);
}

TEST_CASE("independent rows")
{
    Eigen::MatrixXd m(4, 3);
    m << 1, 0, 0, 2, 0, 0, 0, 1, 1, 1, 1, 0;
    const auto rows = independent_rows(m);
    CHECK(rows.size() == 3);
    CHECK(independent_rows(Eigen::MatrixXd::Zero(2, 2)).empty());
}

TEST_CASE("tangent projection")
{
    const ModuliPolytope p = build_polytope(five_cell());
    const Eigen::VectorXd row = p.E.row(3).transpose();
    CHECK(project_to_tangent(p, row).cwiseAbs().maxCoeff() < 1e-14);

    std::mt19937_64 rng(8);
    std::normal_distribution<double> nd;
    Eigen::VectorXd g(30);
    for (auto& v : g) v = nd(rng);
    const Eigen::VectorXd t = project_to_tangent(p, g);
    CHECK((p.E * t).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((project_to_tangent(p, t) - t).cwiseAbs().maxCoeff() < 1e-13);
}
