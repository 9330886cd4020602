#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anglevol/moduli_space.hpp"
#include "anglevol/normal_surface.hpp"
#include "anglevol/triangulation.hpp"

namespace anglevol
{

/// Sum of tet volumes.
double total_volume(const Triangulation& t, const AngleAssignment& x);

/// Slot (tet, s) holds l_s(tet)/2.
Eigen::VectorXd total_gradient(const Triangulation& t, const AngleAssignment& x);

/// Volume change along the segment from -> to, as the Schlafli line
/// integral summed over tets. Exact up to quadrature error, with no
/// cancellation between two absolute volumes.
double volume_increment(const Triangulation& t, const AngleAssignment& from,
                        const AngleAssignment& to);

enum class OptimizationStatus { Critical, BoundaryApproach, IterationLimit };
std::string_view to_string(OptimizationStatus s);

struct TrajectoryPoint
{
    int iteration = 0;
    double volume = 0.0;
    double grad_norm = 0.0;  ///< infinity norm of the projected gradient
    double min_slack = 0.0;
};

struct MaximizeOptions
{
    double tol_grad = 1e-8;
    double tol_slack = 1e-7;
    int max_iter = 10000;
};

struct OptimizationResult
{
    AngleAssignment point;
    OptimizationStatus status = OptimizationStatus::IterationLimit;
    std::vector<TrajectoryPoint> trajectory;
    /// Per edge class: max - min of the member lengths at `point`.
    std::vector<double> length_spreads;
    std::string note;

    [[nodiscard]] double volume() const { return trajectory.back().volume; }
    [[nodiscard]] int iterations() const { return trajectory.back().iteration; }
};

/// Projected gradient ascent of the total volume on AS(M, T), starting at a
/// strictly feasible x0. Each step moves along the tangent projection of
/// the gradient; the trial step is the largest one keeping the slack above
/// 0.1 x the current slack (shortened to a Barzilai-Borwein estimate after
/// the first step) and is halved until the volume increases sufficiently.
/// Throws std::invalid_argument if x0 is not strictly feasible.
OptimizationResult maximize(const Triangulation& t, const ModuliPolytope& p,
                            const AngleAssignment& x0, const MaximizeOptions& opts = {});

/// Default spread tolerance for criticality.
inline constexpr double kCriticalSpreadTol = 1e-6;

struct CriticalityReport
{
    bool critical = false;
    std::vector<double> spreads;  ///< per edge class
    double max_spread = 0.0;
};

/// Length agreement: every edge class has the same Moebius length in all
/// of its member corners (within tol).
CriticalityReport is_critical(const Triangulation& t, const AngleAssignment& x,
                              double tol = kCriticalSpreadTol);

struct Outcome
{
    enum class Kind { SphericalMetric, HyperbolicMetric, EuclideanFlat, NormalSurfaceFound, Inconclusive };

    Kind kind = Kind::Inconclusive;
    std::string note;
    std::vector<TetClass> tet_classes;
    std::optional<SurfaceReport> surface;
};
std::string_view to_string(Outcome::Kind k);

/// Interprets a critical point: all tets classical of one type gives a
/// metric (Euclidean critical points are local minima, reported as such);
/// any flipped tet triggers the normal surface extraction. Anything else,
/// including a non-critical x, is Inconclusive with a reason.
Outcome classify_outcome(const Triangulation& t, const AngleAssignment& x,
                         double tol = kCriticalSpreadTol);

}  // namespace anglevol
