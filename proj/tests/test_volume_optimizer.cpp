#include <doctest.h>

#include <random>
#include <stdexcept>

#include "anglevol/volume_optimizer.hpp"
#include "support.hpp"

using namespace anglevol;

namespace
{
const double kTwoPiSq = 2 * kPi * kPi;

AngleAssignment symmetric() { return AngleAssignment::uniform(5, TetAngles::constant(2 * kPi / 3)); }

AngleAssignment perturbed(const ModuliPolytope& p, std::uint64_t seed, double size)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    Eigen::VectorXd d(30);
    for (auto& v : d) v = nd(rng);
    d = project_to_tangent(p, d);
    return AngleAssignment(symmetric().x + size / d.lpNorm<Eigen::Infinity>() * d);
}
}  // namespace

TEST_CASE("total volume and gradient")
{
    const Triangulation t = five_cell();
    CHECK(std::abs(total_volume(t, symmetric()) - kTwoPiSq) < 1e-8);
    CHECK(total_volume(t, AngleAssignment::uniform(5, volume_base_point())) == 0.0);

    const Eigen::VectorXd g = total_gradient(t, symmetric());
    CHECK(g.size() == 30);
    for (double v : g) CHECK(v == doctest::Approx(0.5 * std::acos(-0.25)).epsilon(1e-12));
}

TEST_CASE("volume increment matches volume difference")
{
    const Triangulation t = five_cell();
    const ModuliPolytope p = build_polytope(t);
    const AngleAssignment a = perturbed(p, 1, 0.1), b = perturbed(p, 2, 0.1);
    CHECK(std::abs(volume_increment(t, a, b) - (total_volume(t, b) - total_volume(t, a))) < 1e-8);
}

TEST_CASE("maximize from the symmetric point")
{
    const Triangulation t = five_cell();
    const ModuliPolytope p = build_polytope(t);
    const OptimizationResult r = maximize(t, p, symmetric());
    CHECK(r.status == OptimizationStatus::Critical);
    CHECK(r.iterations() <= 1);
    CHECK(std::abs(r.volume() - kTwoPiSq) < 1e-8);
    CHECK(r.length_spreads.size() == 10);
    CHECK(to_string(r.status) == "Critical");
}

TEST_CASE("iteration budget and bad starts")
{
    const Triangulation t = five_cell();
    const ModuliPolytope p = build_polytope(t);
    MaximizeOptions opts;
    opts.max_iter = 0;
    const OptimizationResult r = maximize(t, p, perturbed(p, 3, 0.1), opts);
    CHECK(r.status == OptimizationStatus::IterationLimit);
    CHECK(r.trajectory.size() == 1);

    CHECK_THROWS_AS(maximize(t, p, AngleAssignment::uniform(5, TetAngles::constant(1.0))),
                    std::invalid_argument);
}

TEST_CASE("the symmetric five-cell point is a saddle")
{
    // Ascent from a perturbed start climbs past 2 pi^2 towards the boundary.
    const Triangulation t = five_cell();
    const ModuliPolytope p = build_polytope(t);
    const OptimizationResult r = maximize(t, p, perturbed(p, 4, 0.1));
    for (std::size_t k = 1; k < r.trajectory.size(); ++k)
        CHECK(r.trajectory[k].volume >= r.trajectory[k - 1].volume);
    CHECK(r.volume() > kTwoPiSq);
    CHECK(std::abs(r.volume() - total_volume(t, r.point)) < 1e-8);
    CHECK(r.status == OptimizationStatus::BoundaryApproach);
    CHECK(r.trajectory.back().min_slack < 1e-7);
}

TEST_CASE("criticality")
{
    const Triangulation t = five_cell();
    const CriticalityReport c = is_critical(t, symmetric());
    CHECK(c.critical);
    CHECK(c.max_spread < 1e-12);

    const ModuliPolytope p = build_polytope(t);
    const CriticalityReport off = is_critical(t, perturbed(p, 5, 0.1));
    CHECK_FALSE(off.critical);
    CHECK(off.max_spread > 1e-3);

    // Edge classes meeting a tet twice use every corner.
    const Triangulation ov = testing::load("one_vertex.tri");
    const FeasibilityResult lp = feasible_interior(build_polytope(ov));
    const CriticalityReport self = is_critical(ov, lp.point);
    CHECK(self.spreads.size() == 3);
}

TEST_CASE("outcome classification")
{
    const Triangulation t = five_cell();
    const Outcome sph = classify_outcome(t, symmetric());
    CHECK(sph.kind == Outcome::Kind::SphericalMetric);
    CHECK(sph.tet_classes.size() == 5);
    CHECK_FALSE(sph.surface.has_value());

    const Outcome link = classify_outcome(t, testing::five_cell_link_point());
    CHECK(link.kind == Outcome::Kind::NormalSurfaceFound);
    REQUIRE(link.surface.has_value());
    CHECK(link.surface->faces == 4);
    CHECK(link.surface->euler == 2);
    CHECK(link.tet_classes[0].is_classical());
    for (int k = 1; k < 5; ++k) CHECK(link.tet_classes[k].kind == TetClass::Kind::SingleFlip);

    const ModuliPolytope p = build_polytope(t);
    const Outcome none = classify_outcome(t, perturbed(p, 6, 0.1));
    CHECK(none.kind == Outcome::Kind::Inconclusive);
    CHECK(none.note.find("not a critical point") == 0);

    const Outcome flat = classify_outcome(t, AngleAssignment::uniform(5, volume_base_point()));
    CHECK(flat.kind == Outcome::Kind::EuclideanFlat);
    CHECK(to_string(flat.kind) == "EuclideanFlat");
}
