#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expp/checks.hpp"
#include "expp/hull_projections.hpp"
#include "expp/json_io.hpp"
#include "expp/oracle.hpp"
#include "expp/penalties.hpp"
#include "expp/solver.hpp"

namespace {

using namespace expp;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write: " + out_path);
    out << j.dump(2) << "\n";
}

// The homotopy ceiling: L/2 when the gradient Lipschitz constant is known,
// otherwise K nu, otherwise K.
double relevant_threshold(const ProblemSpec& prob, const CMSetSpec& spec) {
    const auto d = descriptors(prob, spec);
    if (d.L) return *d.L / 2.0;
    try {
        return d.K * nu_value(spec);
    } catch (const std::domain_error&) {
        return d.K;
    }
}

struct SolveOptions {
    std::string instance_path;
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    int starts = 1;
    double lambda0 = 0.0;     // 0 -> default
    double gamma = 0.0;       // 0 -> default
    double lambda_max = 0.0;  // 0 -> default
    double feas_tol = 0.0;    // 0 -> default
};

int run_solve(const SolveOptions& opt) {
    Instance inst;
    HomotopySchedule sched;
    SolverConfig scfg;
    PenaltyKind penalty = PenaltyKind::NegSquare;
    try {
        inst = instance_from_json(load_json_file(opt.instance_path));
        const double thr = relevant_threshold(inst.objective, inst.set);
        sched = HomotopySchedule::defaults(thr);
        if (!opt.config_path.empty()) {
            const Json cfg = load_json_file(opt.config_path);
            sched.lambda0 = cfg.value("lambda0", sched.lambda0);
            sched.gamma = cfg.value("gamma", sched.gamma);
            sched.lambda_max = cfg.value("lambda_max", sched.lambda_max);
            sched.warm_start_convex = cfg.value("warm_start_convex", sched.warm_start_convex);
            scfg.max_iters_per_stage = cfg.value("max_iters_per_stage", scfg.max_iters_per_stage);
            scfg.stage_tol = cfg.value("stage_tol", scfg.stage_tol);
            scfg.feas_tol = cfg.value("feas_tol", scfg.feas_tol);
            if (cfg.contains("step_rule"))
                scfg.step_rule = cfg["step_rule"] == "diminishing" ? StepRule::Diminishing
                                                                   : StepRule::FixedLipschitz;
            scfg.diminishing_c = cfg.value("diminishing_c", scfg.diminishing_c);
            if (cfg.contains("penalty"))
                penalty = penalty_kind_from_name(cfg["penalty"].get<std::string>());
        }
        if (opt.lambda0 > 0.0) sched.lambda0 = opt.lambda0;
        if (opt.gamma > 0.0) sched.gamma = opt.gamma;
        if (opt.lambda_max > 0.0) sched.lambda_max = opt.lambda_max;
        if (opt.feas_tol > 0.0) scfg.feas_tol = opt.feas_tol;
        sched.validate();
        scfg.validate();
        if (opt.starts < 1) throw std::invalid_argument("--starts must be >= 1");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        const auto t0 = std::chrono::steady_clock::now();
        SolveResult best;
        std::uint64_t best_start = 0;
        bool have = false;
        for (int s = 0; s < opt.starts; ++s) {
            const std::uint64_t start_seed = opt.seed + static_cast<std::uint64_t>(s);
            const Vector x0 = default_start(inst.set, start_seed);
            SolveResult res = homotopy_solve(inst.objective, inst.set, sched, scfg, x0, penalty);
            if (!have || res.f_rounded < best.f_rounded) {
                best = std::move(res);
                best_start = start_seed;
                have = true;
            }
        }
        const auto t1 = std::chrono::steady_clock::now();

        Json report;
        report["schema"] = 1;
        report["instance"] = inst.id;
        report["seed"] = opt.seed;
        report["starts"] = opt.starts;
        report["best_start"] = best_start;
        report.update(to_json(best));
        report["wall_time"] = std::chrono::duration<double>(t1 - t0).count();
        emit(report, opt.out_path);
        return kExitOk;
    } catch (const DykstraNoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

int run_project(const std::string& set_path, const std::string& point_path,
                const std::string& out_path, double tol) {
    try {
        const CMSetSpec spec = set_from_json(load_json_file(set_path));
        const Vector z = point_from_json(load_json_file(point_path), spec.ambient_dim());
        const Vector p = project_hull(spec, z);
        Json j;
        j["projected"] = point_to_json(p);
        j["moved"] = (p - z).norm();
        j["hull_contains"] = hull_contains(spec, p, tol);
        const auto d = distance_to_set(spec, p);
        j["distance_to_set"] = d.value;
        j["distance_exact"] = d.exact;
        emit(j, out_path);
        return kExitOk;
    } catch (const DykstraNoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

int run_check(const std::string& suite, std::uint64_t seed, std::size_t trials) {
    std::vector<SuiteReport> reports;
    try {
        if (suite == "error-bounds") reports.push_back(check_error_bounds(seed, trials));
        else if (suite == "penalization") reports.push_back(check_penalization(seed, trials));
        else if (suite == "projections") reports.push_back(check_projections(seed, trials));
        else if (suite == "counterexample") reports.push_back(check_counterexample(seed, trials));
        else if (suite == "concavity") reports.push_back(check_concavity(seed, trials));
        else if (suite == "all") {
            reports.push_back(check_error_bounds(seed, trials));
            reports.push_back(check_penalization(seed, std::max<std::size_t>(trials / 10, 10)));
            reports.push_back(check_projections(seed, trials));
            reports.push_back(check_counterexample(seed, trials));
            reports.push_back(check_concavity(seed, trials));
        } else {
            std::cerr << "error: unknown suite '" << suite << "'\n";
            return kExitValidation;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    bool ok = true;
    for (const auto& rep : reports) {
        std::cout << "suite: " << rep.suite << "\n";
        for (const auto& p : rep.properties) {
            std::printf("  %-58s trials=%-7zu failures=%-5zu %s\n", p.name.c_str(), p.trials,
                        p.failures,
                        p.informational ? "info" : (p.passed() ? "pass" : "FAIL"));
            ok = ok && p.passed();
        }
    }
    return ok ? kExitOk : 1;
}

int run_landscape(const std::string& instance_path, const std::string& lambdas_csv,
                  const std::string& axis_path, const std::string& out_path) {
    try {
        const Instance inst = instance_from_json(load_json_file(instance_path));
        std::vector<double> lambdas;
        std::stringstream ss(lambdas_csv);
        for (std::string item; std::getline(ss, item, ',');)
            lambdas.push_back(std::stod(item));
        if (lambdas.empty()) throw std::invalid_argument("no lambdas given");

        const Json axis = load_json_file(axis_path);
        const auto indices = axis.at("indices").get<std::vector<int>>();
        if (indices.empty() || indices.size() > 2)
            throw std::invalid_argument("axis: need 1 or 2 indices");
        const int dim = inst.set.ambient_dim();
        Vector base = Vector::Zero(dim);
        if (axis.contains("base")) base = point_from_json(axis["base"], dim);
        const double lo = axis.value("lo", -1.0);
        const double hi = axis.value("hi", 1.0);
        const int steps = axis.value("steps", 101);
        if (steps < 2 || hi <= lo) throw std::invalid_argument("axis: bad range");
        for (int idx : indices)
            if (idx < 0 || idx >= dim) throw std::invalid_argument("axis: index out of range");

        std::ostringstream csv;
        csv.precision(17);
        csv << (indices.size() == 1 ? "coord1,lambda,F" : "coord1,coord2,lambda,F") << "\n";
        auto field_at = [&](Vector& x, double lambda) {
            if (!hull_contains(inst.set, x))
                throw std::invalid_argument("landscape: slice leaves the hull");
            const PenaltyConfig cfg{PenaltyKind::NegSquare, lambda};
            return eval_penalized(inst.objective, inst.set, cfg, x).value;
        };
        Vector x = base;
        for (double lambda : lambdas) {
            for (int i = 0; i < steps; ++i) {
                const double c1 = lo + (hi - lo) * i / (steps - 1);
                x[indices[0]] = c1;
                if (indices.size() == 1) {
                    csv << c1 << "," << lambda << "," << field_at(x, lambda) << "\n";
                    continue;
                }
                for (int j = 0; j < steps; ++j) {
                    const double c2 = lo + (hi - lo) * j / (steps - 1);
                    x[indices[1]] = c2;
                    csv << c1 << "," << c2 << "," << lambda << "," << field_at(x, lambda)
                        << "\n";
                }
            }
        }
        if (out_path.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(out_path);
            if (!out) throw std::invalid_argument("cannot write: " + out_path);
            out << csv.str();
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

int run_enumerate(const std::string& set_path, std::size_t budget, const std::string& out_path) {
    try {
        const CMSetSpec spec = set_from_json(load_json_file(set_path));
        EnumerationBudget eb;
        if (budget > 0) eb.max_points = budget;
        const auto members = enumerate_set(spec, eb);
        Json j;
        j["count"] = members.size();
        Json pts = Json::array();
        for (const auto& v : members) pts.push_back(point_to_json(v));
        j["points"] = std::move(pts);
        emit(j, out_path);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-modulus optimization toolkit"};
    app.require_subcommand(1);

    SolveOptions sopt;
    auto* solve = app.add_subcommand("solve", "run the homotopy solver on an instance");
    solve->add_option("instance", sopt.instance_path, "instance JSON path")->required();
    solve->add_option("--config", sopt.config_path, "solver config JSON path");
    solve->add_option("--seed", sopt.seed, "base RNG seed");
    solve->add_option("--starts", sopt.starts, "number of multi-start runs");
    solve->add_option("--out", sopt.out_path, "write the report here instead of stdout");
    solve->add_option("--lambda0", sopt.lambda0, "initial penalty weight");
    solve->add_option("--gamma", sopt.gamma, "penalty growth factor");
    solve->add_option("--lambda-max", sopt.lambda_max, "penalty ceiling");
    solve->add_option("--tol", sopt.feas_tol, "feasibility tolerance");

    std::string set_path, point_path, proj_out;
    double proj_tol = kFeasTol;
    auto* project = app.add_subcommand("project", "project a point onto the hull");
    project->add_option("--set", set_path, "set JSON path")->required();
    project->add_option("--point", point_path, "point JSON path")->required();
    project->add_option("--out", proj_out, "output path");
    project->add_option("--tol", proj_tol, "membership tolerance");

    std::string suite = "all";
    std::uint64_t check_seed = 0;
    std::size_t check_trials = 200;
    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite,
                      "error-bounds | penalization | projections | counterexample | "
                      "concavity | all");
    check->add_option("--seed", check_seed, "RNG seed");
    check->add_option("--trials", check_trials, "trials per property");

    std::string land_instance, land_lambdas = "0", land_axis, land_out;
    auto* landscape = app.add_subcommand("landscape", "dump penalized objective slices as CSV");
    landscape->add_option("instance", land_instance, "instance JSON path")->required();
    landscape->add_option("--lambdas", land_lambdas, "comma-separated lambda values");
    landscape->add_option("--axis", land_axis, "axis spec JSON path")->required();
    landscape->add_option("--out", land_out, "output CSV path");

    std::string enum_set, enum_out;
    std::size_t enum_budget = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list all members of a finite family");
    enumerate->add_option("--set", enum_set, "set JSON path")->required();
    enumerate->add_option("--budget", enum_budget, "enumeration cap");
    enumerate->add_option("--out", enum_out, "output path");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) return run_solve(sopt);
    if (project->parsed()) return run_project(set_path, point_path, proj_out, proj_tol);
    if (check->parsed()) return run_check(suite, check_seed, check_trials);
    if (landscape->parsed()) return run_landscape(land_instance, land_lambdas, land_axis, land_out);
    if (enumerate->parsed()) return run_enumerate(enum_set, enum_budget, enum_out);
    return kExitValidation;
}
