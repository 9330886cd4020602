#include <doctest.h>

#include <cmath>
#include <random>

#include "anglevol/errors.hpp"
#include "anglevol/tet_angle.hpp"
#include "support.hpp"

using namespace anglevol;

namespace
{
const double kA = std::acos(1.0 / 3.0);
const TetAngles kRegularS = TetAngles::constant(2 * kPi / 3);
const TetAngles kOrthant = TetAngles::constant(kPi / 2);
}  // namespace

TEST_CASE("slot indexing")
{
    for (int s = 0; s < 6; ++s) {
        const auto [i, j] = kSlotVertices[s];
        CHECK(edge_slot(i, j) == s);
        CHECK(edge_slot(j, i) == s);
        const auto [k, l] = kSlotVertices[opposite_slot(s)];
        CHECK(k != i);
        CHECK(k != j);
        CHECK(l != i);
        CHECK(l != j);
    }
}

TEST_CASE("membership in AS(3)")
{
    CHECK(in_AS3(volume_base_point()).inside);
    CHECK(regular_euclidean_angle() == doctest::Approx(kA).epsilon(1e-15));
    CHECK(in_AS3(kRegularS).inside);
    CHECK(in_AS3(kRegularS).min_slack == doctest::Approx(kPi / 3));
    CHECK_FALSE(in_AS3(TetAngles::constant(kPi / 4)).inside);
    TetAngles x = kRegularS;
    x(0, 1) = 0.2;  // 0.2 + 2pi/3 + 2pi/3 > pi, but 2pi/3 + 2pi/3 - 0.2 > pi
    CHECK_FALSE(in_AS3(x).inside);
}

TEST_CASE("face angles")
{
    auto check_all = [](const FaceAngles& f, double expect) {
        for (int i = 0; i < 4; ++i)
            for (int l = 0; l < 4; ++l)
                if (i != l) CHECK(f.at[i][l] == doctest::Approx(expect).epsilon(1e-12));
    };
    check_all(face_angles(kOrthant), kPi / 2);
    check_all(face_angles(kRegularS), std::acos(-1.0 / 3.0));
    check_all(face_angles(volume_base_point()), kPi / 3);
    CHECK(std::acos(-1.0 / 3.0) == doctest::Approx(1.9106).epsilon(1e-4));
    CHECK_THROWS_AS(face_angles(TetAngles::constant(kPi / 4)), NonSphericalVertex);
}

TEST_CASE("edge lengths")
{
    for (double l : edge_lengths3(kOrthant).v) CHECK(l == doctest::Approx(kPi / 2).epsilon(1e-13));
    for (double l : edge_lengths3(kRegularS).v) CHECK(l == doctest::Approx(std::acos(-0.25)).epsilon(1e-13));
    for (double l : edge_lengths3(volume_base_point()).v) CHECK(std::abs(l) < 1e-7);
    // Cosine-law chain at 30 digits: face cosine 2.2318654665..., length
    // -arccosh of it.
    for (double l : edge_lengths3(TetAngles::constant(1.15)).v)
        CHECK(l == doctest::Approx(-1.4415317472).epsilon(1e-9));
}

TEST_CASE("volume at reference points")
{
    CHECK(tet_volume(volume_base_point()) == 0.0);
    CHECK(std::abs(tet_volume(kOrthant) - kPi * kPi / 8) < 1e-8);
    CHECK(std::abs(tet_volume(kRegularS) - 2 * kPi * kPi / 5) < 1e-8);
    CHECK(std::abs(tet_volume(flip3(kRegularS, 0)) - kPi * kPi / 10) < 1e-7);
    // A point close to the base point exercises the substitution.
    TetAngles near = volume_base_point();
    near[2] += 1e-6;
    near[3] -= 1e-6;
    CHECK(std::abs(tet_volume(near)) < 1e-10);
}

TEST_CASE("volume gradient")
{
    for (double g : tet_volume_gradient(volume_base_point()).v) CHECK(std::abs(g) < 1e-7);
    for (double g : tet_volume_gradient(kOrthant).v) CHECK(g == doctest::Approx(kPi / 4).epsilon(1e-13));
}

TEST_CASE("quadrature budget")
{
    VolumeOptions tight{1e-16, 2};
    CHECK_THROWS_AS(tet_volume(kRegularS, tight), QuadratureFailure);
}

TEST_CASE("flip at a vertex")
{
    const TetAngles f = flip3(kRegularS, 0);
    for (int s = 0; s < 6; ++s) {
        const bool at0 = kSlotVertices[s][0] == 0;
        CHECK(f[s] == doctest::Approx(at0 ? 2 * kPi / 3 : kPi / 3));
    }
    const TetLengths l = edge_lengths3(f);
    for (int s = 0; s < 6; ++s) {
        const bool at0 = kSlotVertices[s][0] == 0;
        const double expect = at0 ? kPi - std::acos(-0.25) : std::acos(-0.25);
        CHECK(l[s] == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(kPi - std::acos(-0.25) == doctest::Approx(1.31812).epsilon(1e-5));
    CHECK(flip3(kOrthant, 0) == kOrthant);

    std::mt19937_64 rng(21);
    for (int n = 0; n < 100; ++n) {
        const TetAngles x = testing::random_as3(rng);
        for (int i = 0; i < 4; ++i) {
            const TetAngles y = flip3(x, i);
            CHECK(in_AS3(y).inside);
            const TetAngles back = flip3(y, i);
            for (int s = 0; s < 6; ++s) CHECK(std::abs(back[s] - x[s]) < 1e-12);
            const TetLengths lx = edge_lengths3(x), ly = edge_lengths3(y);
            for (int s = 0; s < 6; ++s) {
                const auto [a, b] = kSlotVertices[s];
                const bool at_i = a == i || b == i;
                CHECK(std::abs(ly[s] - (at_i ? kPi - lx[s] : lx[s])) < 1e-8);
            }
        }
    }
}

TEST_CASE("classification of tetrahedra")
{
    const TetClass s = classify3(kRegularS);
    CHECK(s.is_classical());
    CHECK(s.type == GeometryType::Spherical);
    CHECK(s.describe() == "Classical/spherical");

    const TetClass e = classify3(volume_base_point());
    CHECK(e.is_classical());
    CHECK(e.type == GeometryType::Euclidean);

    const TetAngles h = TetAngles::constant(1.15);
    CHECK(classify3(h).type == GeometryType::Hyperbolic);
    CHECK(classify3(h).is_classical());

    const TetClass f = classify3(flip3(h, 0));
    CHECK(f.kind == TetClass::Kind::SingleFlip);
    CHECK(f.vertices[0] == 0);
    CHECK(f.type == GeometryType::Hyperbolic);
    CHECK(f.describe() == "SingleFlip(0)/hyperbolic");

    // Double flips F_i F_j and F_k F_l agree, reported by the pair holding 0.
    for (int j = 1; j < 4; ++j) {
        const TetClass d = classify3(flip3(flip3(h, 0), j));
        CHECK(d.kind == TetClass::Kind::DoubleFlip);
        CHECK(d.vertices == std::array<int, 2>{0, j});
        int k = -1, l = -1;
        for (int v = 1; v < 4; ++v) {
            if (v == j) continue;
            (k < 0 ? k : l) = v;
        }
        const TetClass d2 = classify3(flip3(flip3(h, k), l));
        CHECK(d2 == d);
    }

    // Euclidean single flip: lengths exactly pi and 0.
    const TetClass ef = classify3(flip3(testing::apex_euclidean_tet(), 0));
    CHECK(ef.kind == TetClass::Kind::SingleFlip);
    CHECK(ef.type == GeometryType::Euclidean);

    TetLengths bad = TetLengths::constant(-1.0);
    bad[0] = kPi + 1.0;
    CHECK_THROWS_AS(classify_lengths3(bad), UnclassifiablePattern);
}

TEST_CASE("opposite pair angle sums")
{
    for (double s : opposite_pair_angle_sums(volume_base_point())) {
        CHECK(s == doctest::Approx(4 * kA));
        CHECK(s < 2 * kPi);
    }
    CHECK(4 * kA == doctest::Approx(4.92384).epsilon(1e-5));
}

TEST_CASE("apex tetrahedron oracle")
{
    const std::array<Eigen::Vector3d, 4> p{Eigen::Vector3d(0, 0, std::sqrt(2.0) / 4),
                                           Eigen::Vector3d(1, 0, 0),
                                           Eigen::Vector3d(-0.5, std::sqrt(3.0) / 2, 0),
                                           Eigen::Vector3d(-0.5, -std::sqrt(3.0) / 2, 0)};
    const TetAngles direct = testing::euclidean_dihedrals(p);
    const TetAngles expect = testing::apex_euclidean_tet();
    for (int s = 0; s < 6; ++s) CHECK(direct[s] == doctest::Approx(expect[s]).epsilon(1e-12));
}
