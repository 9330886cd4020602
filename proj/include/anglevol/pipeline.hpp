#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "anglevol/moduli_space.hpp"
#include "anglevol/triangulation.hpp"
#include "anglevol/volume_optimizer.hpp"

namespace anglevol
{

struct RunConfig
{
    double tol_grad = 1e-8;
    double tol_slack = 1e-7;
    int max_iter = 10000;
    std::uint64_t seed = 1;
    /// Perturb the LP point before optimizing.
    bool perturb = true;
};

/// LP max-slack point plus a seeded tangent perturbation whose largest
/// entry is 10% of the slack. Deterministic in the seed.
AngleAssignment perturbed_start(const ModuliPolytope& p, const FeasibilityResult& lp,
                                std::uint64_t seed);

struct RunResult
{
    FeasibilityResult lp;
    AngleAssignment start;
    OptimizationResult optimization;
    CriticalityReport criticality;
    Outcome outcome;
};

/// Full pipeline. When the LP is infeasible only `lp` is meaningful.
RunResult run_maximize(const Triangulation& t, const RunConfig& cfg);

/// Human-readable report, floats with 12 significant digits.
void write_report(std::ostream& os, const Triangulation& t, const RunResult& r);

/// Columns iter,volume,grad_norm,min_slack.
void write_trajectory_csv(std::ostream& os, const OptimizationResult& r);

}  // namespace anglevol
