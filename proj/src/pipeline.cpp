#include "anglevol/pipeline.hpp"

#include <iomanip>
#include <ostream>
#include <random>

namespace anglevol
{

AngleAssignment perturbed_start(const ModuliPolytope& p, const FeasibilityResult& lp,
                                std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXd d(lp.point.x.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = normal(rng);
    d = project_to_tangent(p, d);
    const double norm = d.lpNorm<Eigen::Infinity>();
    if (norm == 0.0) return lp.point;
    return AngleAssignment(lp.point.x + (0.1 * lp.slack / norm) * d);
}

RunResult run_maximize(const Triangulation& t, const RunConfig& cfg)
{
    RunResult r;
    const ModuliPolytope p = build_polytope(t);
    r.lp = feasible_interior(p);
    if (!r.lp.feasible) return r;

    r.start = cfg.perturb ? perturbed_start(p, r.lp, cfg.seed) : r.lp.point;
    MaximizeOptions opts;
    opts.tol_grad = cfg.tol_grad;
    opts.tol_slack = cfg.tol_slack;
    opts.max_iter = cfg.max_iter;
    r.optimization = maximize(t, p, r.start, opts);
    r.criticality = is_critical(t, r.optimization.point);
    r.outcome = classify_outcome(t, r.optimization.point);
    return r;
}

void write_report(std::ostream& os, const Triangulation& t, const RunResult& r)
{
    const auto old_flags = os.flags();
    const auto old_prec = os.precision(12);
    os.unsetf(std::ios::floatfield);

    const auto& opt = r.optimization;
    os << "status " << to_string(opt.status) << '\n';
    if (!opt.note.empty()) os << "status_note " << opt.note << '\n';
    os << "iterations " << opt.iterations() << '\n';
    os << "volume " << opt.volume() << '\n';
    os << "grad_norm " << opt.trajectory.back().grad_norm << '\n';
    os << "min_slack " << opt.trajectory.back().min_slack << '\n';
    os << "max_length_spread " << r.criticality.max_spread << '\n';
    for (std::size_t c = 0; c < r.criticality.spreads.size(); ++c) {
        os << "spread edge " << c << ' ' << r.criticality.spreads[c] << '\n';
    }

    os << "outcome " << to_string(r.outcome.kind) << '\n';
    if (!r.outcome.note.empty()) os << "outcome_note " << r.outcome.note << '\n';
    for (std::size_t tet = 0; tet < r.outcome.tet_classes.size(); ++tet) {
        os << "tet " << tet << ' ' << r.outcome.tet_classes[tet].describe() << '\n';
    }
    if (r.outcome.surface) {
        const auto& s = *r.outcome.surface;
        os << "surface F=" << s.faces << " E=" << s.edges << " V=" << s.vertices
           << " chi=" << s.euler << " chi_angles=" << s.euler_from_angles
           << " triangles=" << s.triangles << " quads=" << s.quads << '\n';
        os << "surface long_edges";
        for (int c : s.long_classes) os << ' ' << c;
        os << '\n';
        if (s.nonseparating) os << "surface nonseparating " << (*s.nonseparating ? "true" : "false") << '\n';
    }

    os << "angles";
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        const TetAngles a = opt.point.tet(tet);
        os << "\n  tet " << tet << ':';
        for (int s = 0; s < 6; ++s) os << ' ' << a[s];
    }
    os << '\n';

    os.precision(old_prec);
    os.flags(old_flags);
}

void write_trajectory_csv(std::ostream& os, const OptimizationResult& r)
{
    const auto old_prec = os.precision(12);
    os << "iter,volume,grad_norm,min_slack\n";
    for (const auto& p : r.trajectory) {
        os << p.iteration << ',' << p.volume << ',' << p.grad_norm << ',' << p.min_slack << '\n';
    }
    os.precision(old_prec);
}

}  // namespace anglevol
