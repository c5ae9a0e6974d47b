#include "expp/solver.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace expp {

void SolverConfig::validate() const {
    if (max_iters_per_stage < 1 || stage_tol <= 0.0 || feas_tol <= 0.0)
        throw std::invalid_argument("solver config: budgets and tolerances must be positive");
    if (diminishing_c < 0.0)
        throw std::invalid_argument("solver config: diminishing_c must be >= 0");
}

void HomotopySchedule::validate() const {
    if (!(gamma > 1.0))
        throw std::invalid_argument("homotopy: gamma must exceed 1");
    if (lambda0 > lambda_max)
        throw std::invalid_argument("homotopy: lambda0 must not exceed lambda_max");
}

HomotopySchedule HomotopySchedule::defaults(double threshold) {
    HomotopySchedule s;
    s.lambda0 = std::max(1e-3, 1e-3 * threshold);
    s.gamma = 1.5;
    s.lambda_max = 3.0 * threshold;
    if (s.lambda_max < s.lambda0) s.lambda_max = s.lambda0;
    return s;
}

double estimate_spectral_norm(const Matrix& M) {
    if (M.size() == 0 || M.norm() == 0.0) return 0.0;
    const int n = static_cast<int>(M.cols());
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * i;  // deterministic, generic start
    v.normalize();
    double est = 0.0;
    for (int it = 0; it < 500; ++it) {
        Vector w = M.transpose() * (M * v);
        const double nw = w.norm();
        if (nw == 0.0) return 0.0;
        w /= nw;
        const double next = std::sqrt(nw);
        const bool settled = std::abs(next - est) <= 1e-14 * std::max(1.0, next);
        est = next;
        v = w;
        if (settled && it >= 50) break;
    }
    return est;
}

namespace {

struct StepPlan {
    bool fixed = true;
    double eta = 1.0;  // fixed step
    double c = 1.0;    // diminishing numerator

    double at(int iter) const { return fixed ? eta : c / std::sqrt(iter + 1.0); }
};

StepPlan make_step_plan(const ProblemSpec& prob, const CMSetSpec& spec,
                        const PenaltyConfig& cfg, const SolverConfig& scfg) {
    StepPlan plan;
    if (scfg.step_rule == StepRule::FixedLipschitz) {
        if (cfg.kind == PenaltyKind::SqrtDeficit)
            throw std::invalid_argument(
                "pg_stage: the sqrt-deficit penalty has no Lipschitz gradient; "
                "use diminishing steps");
        const auto d = descriptors(prob, spec);
        if (!d.L)
            throw std::invalid_argument(
                "pg_stage: fixed Lipschitz step requires a known gradient "
                "Lipschitz constant");
        const double lip = *d.L + 2.0 * std::abs(cfg.lambda);
        plan.eta = lip > 0.0 ? 1.0 / lip : 1.0;
        return plan;
    }
    plan.fixed = false;
    plan.c = scfg.diminishing_c;
    if (plan.c == 0.0) {
        const double R = std::sqrt(spec.modulus_sq());
        const double g =
            descriptors(prob, spec).K + 2.0 * std::abs(cfg.lambda) * std::max(1.0, R);
        plan.c = g > 0.0 ? R / g : 1.0;
    }
    return plan;
}

}  // namespace

StageResult pg_stage(const ProblemSpec& prob, const CMSetSpec& spec, const PenaltyConfig& cfg,
                     const Vector& x0, const SolverConfig& scfg) {
    scfg.validate();
    cfg.validate();
    const StepPlan plan = make_step_plan(prob, spec, cfg, scfg);
    Vector x = project_hull(spec, x0);
    const bool track_best = !plan.fixed;
    Vector best_x = x;
    double best_f = eval_penalized(prob, spec, cfg, x).value;
    int iters = 0;
    for (int l = 0; l < scfg.max_iters_per_stage; ++l) {
        const auto pe = eval_penalized(prob, spec, cfg, x);
        if (!pe.has_grad) break;
        Vector next = project_hull(spec, x - plan.at(l) * pe.grad);
        const double change = (next - x).norm();
        x = std::move(next);
        ++iters;
        if (track_best) {
            const double f = eval_penalized(prob, spec, cfg, x).value;
            if (f < best_f) {
                best_f = f;
                best_x = x;
            }
        }
        if (change <= scfg.stage_tol) break;
    }
    return {track_best ? best_x : x, iters};
}

SolveResult homotopy_solve(const ProblemSpec& prob, const CMSetSpec& spec,
                           const HomotopySchedule& sched, const SolverConfig& scfg,
                           const Vector& x0, PenaltyKind penalty) {
    sched.validate();
    scfg.validate();
    if (penalty == PenaltyKind::SqrtDeficit)
        throw std::invalid_argument("homotopy_solve: use neg_square or squared_deficit");

    SolveResult res;
    Vector x = project_hull(spec, x0);

    SolverConfig stage_cfg = scfg;
    if (scfg.step_rule == StepRule::FixedLipschitz &&
        !descriptors(prob, spec).L.has_value())
        stage_cfg.step_rule = StepRule::Diminishing;

    if (sched.warm_start_convex) {
        const auto d = descriptors(prob, spec);
        if (d.L) {
            // convexified stage: F_lambda with lambda < -L/2
            PenaltyConfig warm{PenaltyKind::NegSquare, -(*d.L / 2.0 + 1.0)};
            auto st = pg_stage(prob, spec, warm, x, stage_cfg);
            x = std::move(st.x);
            res.stage_trace.push_back(
                {warm.lambda, st.iterations,
                 eval_penalized(prob, spec, warm, x).value});
        }
    }

    Vector prev_rounded;
    int stages_at_max = 0;
    for (int k = 0;; ++k) {
        const double lambda = std::min(sched.lambda0 * std::pow(sched.gamma, k),
                                       sched.lambda_max);
        const PenaltyConfig cfg{penalty, lambda};
        auto st = pg_stage(prob, spec, cfg, x, stage_cfg);
        x = std::move(st.x);
        res.stage_trace.push_back(
            {lambda, st.iterations, eval_penalized(prob, spec, cfg, x).value});

        const Vector rounded = round_to_set(spec, x);
        const auto feas = distance_to_set(spec, x);
        const bool stable =
            prev_rounded.size() > 0 && (rounded - prev_rounded).norm() <= scfg.feas_tol;
        prev_rounded = rounded;
        if (stable && feas.value <= scfg.feas_tol) break;
        if (lambda >= sched.lambda_max && ++stages_at_max >= 3) break;
    }

    res.hull_point = x;
    res.rounded = round_to_set(spec, x);
    res.f_hull = eval(prob, x).value;
    res.f_rounded = eval(prob, res.rounded).value;
    const auto feas = distance_to_set(spec, x);
    res.feas_residual = feas.value;
    res.feas_exact = feas.exact;
    return res;
}

Vector default_start(const CMSetSpec& spec, std::uint64_t seed) {
    const int dim = spec.ambient_dim();
    const Vector center = project_hull(spec, Vector::Zero(dim));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector noise(dim);
    for (int i = 0; i < dim; ++i) noise[i] = gauss(rng);
    const double scale = 0.1 * std::sqrt(spec.modulus_sq() / dim);
    return project_hull(spec, center + scale * noise);
}

}  // namespace expp
