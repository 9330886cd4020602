#include "anglevol/moduli_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anglevol/errors.hpp"

namespace anglevol
{

namespace
{

constexpr double kPivotTol = 1e-9;
constexpr double kInfeasibleTol = 1e-9;

/// Dense tableau simplex in standard form: maximize c.z, A z = b, z >= 0.
class Simplex
{
public:
    enum class Status { Optimal, Infeasible, Unbounded };

    Simplex(Eigen::MatrixXd A, Eigen::VectorXd b, Eigen::VectorXd c)
        : A_(std::move(A)), b_(std::move(b)), c_(std::move(c))
    {
    }

    Status solve(Eigen::VectorXd& z)
    {
        const int m = static_cast<int>(A_.rows());
        const int n = static_cast<int>(A_.cols());

        for (int r = 0; r < m; ++r) {
            if (b_(r) < 0.0) {
                A_.row(r) *= -1.0;
                b_(r) *= -1.0;
            }
        }

        // Tableau: m constraint rows plus the objective row; columns are the
        // n structural variables, m artificials and the right-hand side.
        T_ = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
        T_.topLeftCorner(m, n) = A_;
        T_.block(0, n, m, m).setIdentity();
        T_.topRightCorner(m, 1) = b_;
        basis_.resize(m);
        for (int r = 0; r < m; ++r) basis_[r] = n + r;

        // Phase 1: maximize -sum(artificials).
        Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
        phase1.tail(m).setConstant(-1.0);
        set_objective(phase1);
        run(n + m);
        // Objective value is -sum(artificials); it must reach zero.
        if (T_(m, n + m) < -kInfeasibleTol) return Status::Infeasible;

        // Drive artificials out of the basis; rows with no structural pivot
        // are redundant and are left on a zero artificial.
        for (int r = 0; r < m; ++r) {
            if (basis_[r] < n) continue;
            for (int col = 0; col < n; ++col) {
                if (std::abs(T_(r, col)) > kPivotTol) {
                    pivot(r, col);
                    break;
                }
            }
        }

        Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
        phase2.head(n) = c_;
        set_objective(phase2);
        // Artificials may not re-enter.
        const bool bounded = run(n);
        if (!bounded) return Status::Unbounded;

        z = Eigen::VectorXd::Zero(n);
        for (int r = 0; r < m; ++r) {
            if (basis_[r] < n) z(basis_[r]) = T_(r, n + m);
        }
        return Status::Optimal;
    }

private:
    // Objective row holds reduced costs as -(c_j - c_B B^-1 A_j).
    void set_objective(const Eigen::VectorXd& cost)
    {
        const int m = static_cast<int>(basis_.size());
        const auto cols = T_.cols();
        T_.row(m).setZero();
        T_.row(m).head(cost.size()) = -cost.transpose();
        for (int r = 0; r < m; ++r) {
            const double cb = cost(basis_[r]);
            if (cb != 0.0) T_.row(m) += cb * T_.row(r).head(cols);
        }
    }

    void pivot(int row, int col)
    {
        T_.row(row) /= T_(row, col);
        for (int r = 0; r < T_.rows(); ++r) {
            if (r == row) continue;
            const double factor = T_(r, col);
            if (factor != 0.0) T_.row(r) -= factor * T_.row(row);
        }
        basis_[row] = col;
    }

    // Bland's rule over the first `allowed` columns. Returns false when
    // the objective is unbounded.
    bool run(int allowed)
    {
        const int m = static_cast<int>(basis_.size());
        const auto rhs = T_.cols() - 1;
        const long budget = 200L * (T_.cols() + m) + 10000;
        for (long iter = 0; iter < budget; ++iter) {
            int enter = -1;
            for (int col = 0; col < allowed; ++col) {
                if (T_(m, col) < -kPivotTol) {
                    enter = col;
                    break;
                }
            }
            if (enter < 0) return true;

            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int r = 0; r < m; ++r) {
                const double a = T_(r, enter);
                if (a <= kPivotTol) continue;
                const double ratio = T_(r, rhs) / a;
                if (ratio < best - 1e-12 ||
                    (std::abs(ratio - best) <= 1e-12 && leave >= 0 && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
        throw LPNumericalFailure("simplex pivot budget exhausted");
    }

    Eigen::MatrixXd A_;
    Eigen::VectorXd b_;
    Eigen::VectorXd c_;
    Eigen::MatrixXd T_;
    std::vector<int> basis_;
};

}  // namespace

AngleAssignment AngleAssignment::uniform(int n_tets, const TetAngles& angles)
{
    AngleAssignment a(Eigen::VectorXd(6 * n_tets));
    for (int t = 0; t < n_tets; ++t) a.set_tet(t, angles);
    return a;
}

TetAngles AngleAssignment::tet(int t) const
{
    TetAngles out;
    for (int s = 0; s < 6; ++s) out[s] = x(6 * t + s);
    return out;
}

void AngleAssignment::set_tet(int t, const TetAngles& angles)
{
    for (int s = 0; s < 6; ++s) x(6 * t + s) = angles[s];
}

std::vector<int> independent_rows(const Eigen::MatrixXd& m, double tol)
{
    Eigen::MatrixXd work = m;
    std::vector<int> order(m.rows());
    for (int r = 0; r < m.rows(); ++r) order[r] = r;

    std::vector<int> out;
    int lead = 0;
    for (int col = 0; col < work.cols() && lead < work.rows(); ++col) {
        int piv = lead;
        for (int r = lead + 1; r < work.rows(); ++r) {
            if (std::abs(work(r, col)) > std::abs(work(piv, col))) piv = r;
        }
        if (std::abs(work(piv, col)) <= tol) continue;
        work.row(lead).swap(work.row(piv));
        std::swap(order[lead], order[piv]);
        for (int r = lead + 1; r < work.rows(); ++r) {
            const double f = work(r, col) / work(lead, col);
            if (f != 0.0) work.row(r) -= f * work.row(lead);
        }
        out.push_back(order[lead]);
        ++lead;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ModuliPolytope ModuliPolytope::from_constraints(Eigen::MatrixXd E, Eigen::VectorXd e_rhs,
                                                Eigen::MatrixXd G, Eigen::VectorXd h)
{
    ModuliPolytope p;
    p.E = std::move(E);
    p.e_rhs = std::move(e_rhs);
    p.G = std::move(G);
    p.h = std::move(h);

    const auto rows = independent_rows(p.E);
    const auto n = p.E.cols();
    if (rows.empty()) {
        p.row_basis = Eigen::MatrixXd::Zero(n, 0);
    } else {
        Eigen::MatrixXd indep(n, static_cast<Eigen::Index>(rows.size()));
        for (std::size_t k = 0; k < rows.size(); ++k) indep.col(k) = p.E.row(rows[k]).transpose();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(indep);
        p.row_basis = qr.householderQ() * Eigen::MatrixXd::Identity(n, indep.cols());
    }
    return p;
}

double ModuliPolytope::slack(const Eigen::VectorXd& x) const
{
    if (G.rows() == 0) return std::numeric_limits<double>::infinity();
    return (G * x - h).minCoeff();
}

double ModuliPolytope::equality_residual(const Eigen::VectorXd& x) const
{
    if (E.rows() == 0) return 0.0;
    return (E * x - e_rhs).cwiseAbs().maxCoeff();
}

ModuliPolytope build_polytope(const Triangulation& t)
{
    const int n = 6 * t.n_tets();
    const auto& classes = t.edge_classes();

    Eigen::MatrixXd E = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(classes.size()), n);
    Eigen::VectorXd e_rhs = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(classes.size()), kTwoPi);
    for (const auto& ec : classes) {
        for (const auto& m : ec.members) E(ec.id, 6 * m.tet + m.slot) += 1.0;
    }

    const int rows = ModuliPolytope::kRowsPerTet * t.n_tets();
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(rows, n);
    Eigen::VectorXd h = Eigen::VectorXd::Zero(rows);
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        const int base = ModuliPolytope::kRowsPerTet * tet;
        const int col = 6 * tet;
        for (int s = 0; s < 6; ++s) {
            G(base + s, col + s) = 1.0;
            G(base + 6 + s, col + s) = -1.0;
            h(base + 6 + s) = -kPi;
        }
        int r = base + 12;
        for (int i = 0; i < 4; ++i) {
            std::array<int, 3> at{};
            int k = 0;
            for (int j = 0; j < 4; ++j) {
                if (j != i) at[k++] = col + edge_slot(i, j);
            }
            for (int c : at) G(r, c) = 1.0;
            h(r++) = kPi;
            for (int odd = 0; odd < 3; ++odd) {
                for (int q = 0; q < 3; ++q) G(r, at[q]) = q == odd ? 1.0 : -1.0;
                h(r++) = -kPi;
            }
        }
    }
    return ModuliPolytope::from_constraints(std::move(E), std::move(e_rhs), std::move(G), std::move(h));
}

FeasibilityResult feasible_interior(const ModuliPolytope& p)
{
    const auto n = p.E.cols();
    const auto m1 = p.E.rows();
    const auto m2 = p.G.rows();

    // Variables: x (n), s+ and s- (the free slack level), one surplus per
    // inequality row, and one for the cap s <= pi.
    const auto cols = n + 2 + m2 + 1;
    const auto rows = m1 + m2 + 1;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::VectorXd b(rows);

    A.topLeftCorner(m1, n) = p.E;
    b.head(m1) = p.e_rhs;

    A.block(m1, 0, m2, n) = p.G;
    A.block(m1, n, m2, 1).setConstant(-1.0);
    A.block(m1, n + 1, m2, 1).setConstant(1.0);
    A.block(m1, n + 2, m2, m2) = -Eigen::MatrixXd::Identity(m2, m2);
    b.segment(m1, m2) = p.h;

    A(rows - 1, n) = 1.0;
    A(rows - 1, n + 1) = -1.0;
    A(rows - 1, cols - 1) = 1.0;
    b(rows - 1) = kPi;

    Eigen::VectorXd c = Eigen::VectorXd::Zero(cols);
    c(n) = 1.0;
    c(n + 1) = -1.0;

    Simplex lp(std::move(A), std::move(b), std::move(c));
    Eigen::VectorXd z;
    const auto status = lp.solve(z);

    FeasibilityResult out;
    if (status == Simplex::Status::Infeasible) {
        out.feasible = false;
        out.slack = -std::numeric_limits<double>::infinity();
        return out;
    }
    if (status == Simplex::Status::Unbounded) {
        throw LPNumericalFailure("max-slack LP reported unbounded despite the cap");
    }

    Eigen::VectorXd x = z.head(n);
    // Remove pivoting residue from the equalities.
    if (p.row_basis.cols() > 0 && m1 > 0) {
        const Eigen::VectorXd r = p.E * x - p.e_rhs;
        const Eigen::VectorXd corr = p.E.transpose() * (p.E * p.E.transpose())
                                                          .completeOrthogonalDecomposition()
                                                          .solve(r);
        x -= corr;
    }
    out.point = AngleAssignment(x);
    out.slack = p.slack(x);
    out.feasible = out.slack > kInfeasibleTol;
    return out;
}

Eigen::VectorXd project_to_tangent(const ModuliPolytope& p, const Eigen::VectorXd& g)
{
    if (p.row_basis.cols() == 0) return g;
    return g - p.row_basis * (p.row_basis.transpose() * g);
}

}  // namespace anglevol
