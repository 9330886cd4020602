#include "anglevol/volume_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "anglevol/errors.hpp"

namespace anglevol
{

namespace
{
constexpr double kArmijo = 1e-4;
constexpr double kMinDisplacement = 1e-14;
constexpr double kSlackFraction = 0.1;
}  // namespace

std::string_view to_string(OptimizationStatus s)
{
    switch (s) {
        case OptimizationStatus::Critical:
            return "Critical";
        case OptimizationStatus::BoundaryApproach:
            return "BoundaryApproach";
        case OptimizationStatus::IterationLimit:
            return "IterationLimit";
    }
    return "Unknown";
}

std::string_view to_string(Outcome::Kind k)
{
    switch (k) {
        case Outcome::Kind::SphericalMetric:
            return "SphericalMetric";
        case Outcome::Kind::HyperbolicMetric:
            return "HyperbolicMetric";
        case Outcome::Kind::EuclideanFlat:
            return "EuclideanFlat";
        case Outcome::Kind::NormalSurfaceFound:
            return "NormalSurfaceFound";
        case Outcome::Kind::Inconclusive:
            return "Inconclusive";
    }
    return "Unknown";
}

double total_volume(const Triangulation& t, const AngleAssignment& x)
{
    double v = 0.0;
    for (int tet = 0; tet < t.n_tets(); ++tet) v += tet_volume(x.tet(tet));
    return v;
}

Eigen::VectorXd total_gradient(const Triangulation& t, const AngleAssignment& x)
{
    Eigen::VectorXd g(6 * t.n_tets());
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        const TetLengths half = tet_volume_gradient(x.tet(tet));
        for (int s = 0; s < 6; ++s) g(6 * tet + s) = half[s];
    }
    return g;
}

double volume_increment(const Triangulation& t, const AngleAssignment& from, const AngleAssignment& to)
{
    double dv = 0.0;
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        dv += schlafli_line_integral(from.tet(tet), to.tet(tet));
    }
    return dv;
}

OptimizationResult maximize(const Triangulation& t, const ModuliPolytope& p, const AngleAssignment& x0,
                            const MaximizeOptions& opts)
{
    if (!(p.slack(x0.x) > 0.0)) {
        throw std::invalid_argument("maximize: starting point is not strictly feasible");
    }

    OptimizationResult res;
    AngleAssignment x = x0;
    double volume = total_volume(t, x);

    Eigen::VectorXd prev_x, prev_pg;
    for (int iter = 0;; ++iter) {
        const Eigen::VectorXd pg = project_to_tangent(p, total_gradient(t, x));
        const double gn = pg.lpNorm<Eigen::Infinity>();
        const double slack = p.slack(x.x);
        res.trajectory.push_back({iter, volume, gn, slack});

        if (gn < opts.tol_grad) {
            res.status = slack > opts.tol_slack ? OptimizationStatus::Critical
                                                : OptimizationStatus::BoundaryApproach;
            break;
        }
        if (iter >= opts.max_iter) {
            res.status = OptimizationStatus::IterationLimit;
            break;
        }

        // Largest step keeping every inequality at >= 0.1 x current slack.
        const Eigen::VectorXd margin = p.G * x.x - p.h;
        const Eigen::VectorXd rate = p.G * pg;
        double step = std::numeric_limits<double>::infinity();
        for (Eigen::Index r = 0; r < rate.size(); ++r) {
            if (rate(r) < 0.0) {
                step = std::min(step, (margin(r) - kSlackFraction * slack) / -rate(r));
            }
        }
        if (!std::isfinite(step)) step = 1.0 / gn;

        if (prev_x.size() > 0) {
            const Eigen::VectorXd dx = x.x - prev_x;
            const Eigen::VectorXd dg = pg - prev_pg;
            const double curv = -dx.dot(dg);
            if (curv > 0.0) step = std::min(step, dx.squaredNorm() / curv);
        }

        const double rate_sq = pg.squaredNorm();
        bool accepted = false;
        AngleAssignment trial;
        double gain = 0.0;
        while (step * gn >= kMinDisplacement) {
            trial = AngleAssignment(x.x + step * pg);
            if (p.slack(trial.x) > 0.0) {
                // Trials deep in ill-conditioned corners may fail the
                // length checks; treat that as a rejected step.
                try {
                    gain = volume_increment(t, x, trial);
                    total_gradient(t, trial);
                    accepted = gain >= kArmijo * step * rate_sq;
                } catch (const Error&) {
                    accepted = false;
                }
                if (accepted) break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            if (slack < opts.tol_slack) {
                res.status = OptimizationStatus::BoundaryApproach;
            } else {
                res.status = OptimizationStatus::IterationLimit;
                res.note = "line search stalled in the interior";
            }
            break;
        }

        prev_x = x.x;
        prev_pg = pg;
        x = trial;
        volume += gain;
    }

    res.point = x;
    res.length_spreads = is_critical(t, x).spreads;
    return res;
}

CriticalityReport is_critical(const Triangulation& t, const AngleAssignment& x, double tol)
{
    const auto n_classes = t.edge_classes().size();
    std::vector<double> lo(n_classes, std::numeric_limits<double>::infinity());
    std::vector<double> hi(n_classes, -std::numeric_limits<double>::infinity());
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        const TetLengths l = edge_lengths3(x.tet(tet));
        for (int s = 0; s < 6; ++s) {
            const int c = t.edge_class_of(tet, s);
            lo[c] = std::min(lo[c], l[s]);
            hi[c] = std::max(hi[c], l[s]);
        }
    }
    CriticalityReport r;
    r.spreads.resize(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        r.spreads[c] = hi[c] - lo[c];
        r.max_spread = std::max(r.max_spread, r.spreads[c]);
    }
    r.critical = r.max_spread < tol;
    return r;
}

Outcome classify_outcome(const Triangulation& t, const AngleAssignment& x, double tol)
{
    Outcome out;
    const CriticalityReport crit = is_critical(t, x, tol);
    if (!crit.critical) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "not a critical point: max edge length spread " << crit.max_spread;
        out.note = msg.str();
        return out;
    }

    std::set<GeometryType> types;
    bool any_flip = false;
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        try {
            out.tet_classes.push_back(classify3(x.tet(tet)));
        } catch (const Error& e) {
            out.note = "tet " + std::to_string(tet) + " unclassifiable: " + e.what();
            return out;
        }
        types.insert(out.tet_classes.back().type);
        any_flip = any_flip || !out.tet_classes.back().is_classical();
    }
    if (types.size() > 1) {
        std::string list;
        for (auto ty : types) list += (list.empty() ? "" : ", ") + std::string(to_string(ty));
        out.note = "tetrahedra of mixed types at a critical point (" + list + ")";
        return out;
    }
    const GeometryType type = *types.begin();

    if (any_flip) {
        try {
            out.surface = extract_surface(t, x);
        } catch (const Error& e) {
            out.note = std::string("normal surface extraction failed: ") + e.kind() + ": " + e.what();
            return out;
        }
        if (out.surface->long_classes.empty()) {
            out.note = "flipped tetrahedra present but no edge class has length >= pi";
            out.surface.reset();
            return out;
        }
        out.kind = Outcome::Kind::NormalSurfaceFound;
        out.note = std::string("base type ") + std::string(to_string(type));
        return out;
    }

    switch (type) {
        case GeometryType::Spherical:
            out.kind = Outcome::Kind::SphericalMetric;
            break;
        case GeometryType::Hyperbolic:
            out.kind = Outcome::Kind::HyperbolicMetric;
            break;
        case GeometryType::Euclidean:
            out.kind = Outcome::Kind::EuclideanFlat;
            out.note = "critical point is a local minimum of the volume, not a maximum";
            break;
    }
    return out;
}

}  // namespace anglevol
