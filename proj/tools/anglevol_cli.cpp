// anglevol: check, feasible and maximize for angle structures on closed
// triangulated 3-manifolds.
//
// Exit codes: 0 success, 1 infeasible or negative answer, 2 input error,
// 3 iteration budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "anglevol/errors.hpp"
#include "anglevol/pipeline.hpp"

namespace
{

using namespace anglevol;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

Triangulation load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Triangulation::parse(buf.str());
}

int cmd_check(const std::string& path)
{
    const Triangulation t = load(path);
    std::cout << "tets=" << t.n_tets() << " edges=" << t.edge_classes().size()
              << " vertices=" << t.vertex_classes().size()
              << " one_vertex=" << (t.is_one_vertex() ? "true" : "false")
              << " closed=" << (t.is_closed_manifold() ? "true" : "false") << '\n';
    std::cout << "valences";
    for (const auto& ec : t.edge_classes()) std::cout << ' ' << ec.valence();
    std::cout << '\n';
    return t.is_closed_manifold() ? kExitOk : kExitInput;
}

int cmd_feasible(const std::string& path)
{
    const Triangulation t = load(path);
    const ModuliPolytope p = build_polytope(t);
    const FeasibilityResult r = feasible_interior(p);
    std::cout.precision(12);
    if (!r.feasible) {
        std::cout << "infeasible (best slack " << r.slack << ")\n";
        return kExitNegative;
    }
    std::cout << "feasible slack=" << r.slack << '\n';
    for (int tet = 0; tet < t.n_tets(); ++tet) {
        const TetAngles a = r.point.tet(tet);
        std::cout << "tet " << tet << ':';
        for (int s = 0; s < 6; ++s) std::cout << ' ' << a[s];
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_maximize(const std::string& path, const RunConfig& cfg, const std::string& csv_path,
                 const std::string& report_path)
{
    const Triangulation t = load(path);
    const RunResult r = run_maximize(t, cfg);
    if (!r.lp.feasible) {
        std::cout << "infeasible\n";
        return kExitNegative;
    }

    if (report_path.empty()) {
        write_report(std::cout, t, r);
    } else {
        std::ofstream out(report_path);
        if (!out) throw Error("IOError", "cannot write " + report_path);
        write_report(out, t, r);
        std::cout << "status " << to_string(r.optimization.status) << '\n'
                  << "outcome " << to_string(r.outcome.kind) << '\n';
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw Error("IOError", "cannot write " + csv_path);
        write_trajectory_csv(out, r.optimization);
    }

    switch (r.optimization.status) {
        case OptimizationStatus::Critical:
            return kExitOk;
        case OptimizationStatus::BoundaryApproach:
            return kExitNegative;
        case OptimizationStatus::IterationLimit:
            return kExitBudget;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Angle structures and volume maximization on triangulated 3-manifolds"};
    app.require_subcommand(1);

    std::string path;
    auto* check = app.add_subcommand("check", "validate a triangulation file");
    check->add_option("file", path, "triangulation file")->required();

    auto* feasible = app.add_subcommand("feasible", "find a strictly feasible angle structure");
    feasible->add_option("file", path, "triangulation file")->required();

    RunConfig cfg;
    std::string csv_path, report_path;
    auto* maximize = app.add_subcommand("maximize", "maximize the volume and classify the result");
    maximize->add_option("file", path, "triangulation file")->required();
    maximize->add_option("--tol-grad", cfg.tol_grad, "projected gradient tolerance")
        ->check(CLI::PositiveNumber);
    maximize->add_option("--tol-slack", cfg.tol_slack, "boundary slack tolerance")
        ->check(CLI::PositiveNumber);
    maximize->add_option("--max-iter", cfg.max_iter, "iteration budget")->check(CLI::NonNegativeNumber);
    maximize->add_option("--seed", cfg.seed, "seed of the start perturbation");
    bool no_perturb = false;
    maximize->add_flag("--no-perturb", no_perturb, "start at the LP max-slack point itself");
    maximize->add_option("--csv", csv_path, "write the trajectory CSV here");
    maximize->add_option("--report", report_path, "write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    cfg.perturb = !no_perturb;
    try {
        if (*check) return cmd_check(path);
        if (*feasible) return cmd_feasible(path);
        return cmd_maximize(path, cfg, csv_path, report_path);
    } catch (const Error& e) {
        std::cerr << e.kind() << ": " << e.what() << '\n';
        return kExitInput;
    }
}
