#pragma once

#include <Eigen/Dense>

#include "anglevol/tet_angle.hpp"
#include "anglevol/triangulation.hpp"

namespace anglevol
{

/// One TetAngles per tetrahedron, flattened as 6 * tet + slot.
struct AngleAssignment
{
    Eigen::VectorXd x;

    AngleAssignment() = default;
    explicit AngleAssignment(Eigen::VectorXd values) : x(std::move(values)) {}
    /// Every tet gets the same angles.
    static AngleAssignment uniform(int n_tets, const TetAngles& angles);

    [[nodiscard]] int n_tets() const { return static_cast<int>(x.size() / 6); }
    [[nodiscard]] TetAngles tet(int t) const;
    void set_tet(int t, const TetAngles& angles);
};

/// AS(M, T) as { x : E x = e_rhs, G x > h }.
///
/// E has one row per edge class (angles around the edge sum to 2 pi). G has
/// 28 rows per tet, in this order: six lower box bounds x_s > 0, six upper
/// box bounds -x_s > -pi, then for each vertex i the sum x_ij + x_ik + x_il
/// > pi followed by the three rotations -x_ij - x_ik + x_il > -pi.
struct ModuliPolytope
{
    Eigen::MatrixXd E;
    Eigen::VectorXd e_rhs;
    Eigen::MatrixXd G;
    Eigen::VectorXd h;
    /// Orthonormal basis (columns) of the row space of E after dropping
    /// dependent rows.
    Eigen::MatrixXd row_basis;

    static constexpr int kRowsPerTet = 28;

    /// Assembles a polytope from explicit constraint data.
    static ModuliPolytope from_constraints(Eigen::MatrixXd E, Eigen::VectorXd e_rhs,
                                           Eigen::MatrixXd G, Eigen::VectorXd h);

    [[nodiscard]] int dimension() const { return static_cast<int>(E.cols()); }
    /// min(G x - h).
    [[nodiscard]] double slack(const Eigen::VectorXd& x) const;
    /// max |E x - e_rhs|.
    [[nodiscard]] double equality_residual(const Eigen::VectorXd& x) const;
};

ModuliPolytope build_polytope(const Triangulation& t);

/// Indices of a maximal set of linearly independent rows of m, found by
/// row-echelon reduction with partial pivoting.
std::vector<int> independent_rows(const Eigen::MatrixXd& m, double tol = 1e-12);

struct FeasibilityResult
{
    bool feasible = false;
    AngleAssignment point;
    /// min(G x - h) at the returned point; the LP optimum when infeasible.
    double slack = 0.0;
};

/// Max-slack interior point: maximize s subject to E x = e_rhs and
/// G x >= h + s, solved by a dense two-phase simplex with Bland's rule.
/// Infeasible when the optimum s is not positive. Throws
/// LPNumericalFailure if the pivot budget is exhausted.
FeasibilityResult feasible_interior(const ModuliPolytope& p);

/// Orthogonal projection of g onto the null space of E.
Eigen::VectorXd project_to_tangent(const ModuliPolytope& p, const Eigen::VectorXd& g);

}  // namespace anglevol
