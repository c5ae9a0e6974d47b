#pragma once

#include <cstdint>
#include <vector>

#include "expp/penalties.hpp"

namespace expp {

enum class StepRule {
    FixedLipschitz,  // eta = 1/(L + 2|lambda|)
    Diminishing,     // eta_l = c / sqrt(l+1)
};

struct SolverConfig {
    StepRule step_rule = StepRule::FixedLipschitz;
    double diminishing_c = 0.0;  // 0 -> R / (K + 2|lambda| R)
    int max_iters_per_stage = 500;
    double stage_tol = 1e-9;  // iterate-change stopping
    double feas_tol = kFeasTol;

    void validate() const;
};

struct HomotopySchedule {
    double lambda0 = 1e-3;
    double gamma = 1.5;  // multiplicative growth, > 1
    double lambda_max = 1.0;
    bool warm_start_convex = false;  // initial stage at lambda = -(L/2 + 1)

    void validate() const;
    // lambda0 = max(1e-3, 1e-3 * threshold), gamma = 1.5, lambda_max = 3 * threshold.
    static HomotopySchedule defaults(double threshold);
};

struct StageTrace {
    double lambda = 0.0;
    int iterations = 0;
    double penalized_value = 0.0;
};

struct SolveResult {
    Vector hull_point;
    Vector rounded;
    double f_hull = 0.0;
    double f_rounded = 0.0;
    double feas_residual = 0.0;  // distance to V, or an upper bound
    bool feas_exact = true;
    std::vector<StageTrace> stage_trace;
};

// One projected gradient / subgradient stage at fixed penalty weight.
// Iterates stay in the hull; stops on iterate change <= stage_tol or on
// budget exhaustion. The smooth FixedLipschitz stage descends monotonically.
// Diminishing stages return the best penalized value seen.
struct StageResult {
    Vector x;
    int iterations = 0;
};
StageResult pg_stage(const ProblemSpec& prob, const CMSetSpec& spec,
                     const PenaltyConfig& cfg, const Vector& x0,
                     const SolverConfig& scfg);

// Homotopy continuation: stages at lambda_k = min(lambda0 gamma^k, lambda_max),
// each warm-started from the previous solution, with rounding and feasibility
// reporting. Stops when the rounded point is stable across two consecutive
// stages with feas_residual <= feas_tol, or shortly after reaching lambda_max.
SolveResult homotopy_solve(const ProblemSpec& prob, const CMSetSpec& spec,
                           const HomotopySchedule& sched, const SolverConfig& scfg,
                           const Vector& x0,
                           PenaltyKind penalty = PenaltyKind::NegSquare);

// Power-iteration estimate of the largest singular value; deterministic
// start vector, zero matrix gives 0.
double estimate_spectral_norm(const Matrix& M);

// Default starting point: hull projection of a seeded Gaussian perturbation
// of the projected zero vector.
Vector default_start(const CMSetSpec& spec, std::uint64_t seed);

}  // namespace expp
