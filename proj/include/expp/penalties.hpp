#pragma once

#include "expp/cm_sets.hpp"
#include "expp/objectives.hpp"

namespace expp {

enum class PenaltyKind {
    NegSquare,      // f(x) - lambda ||x||^2
    SqrtDeficit,    // f(x) + lambda sqrt(C - ||x||^2)
    SquaredDeficit, // f(x) + lambda (C - ||x||^2)
};

std::string penalty_kind_name(PenaltyKind k);
PenaltyKind penalty_kind_from_name(const std::string& name);

struct PenaltyConfig {
    PenaltyKind kind = PenaltyKind::NegSquare;
    double lambda = 0.0;  // may be negative for NegSquare during homotopy warm-up

    void validate() const;
};

struct PenalizedEval {
    double value = 0.0;
    Vector grad;
    bool has_grad = true;  // false for SqrtDeficit on the boundary ||x||^2 = C
    bool smooth = true;
};

// Penalized objective value and first-order information. Evaluation is
// allowed slightly outside the hull for line searches; the sqrt deficit
// clamps its argument at zero and withholds the subgradient there.
PenalizedEval eval_penalized(const ProblemSpec& prob, const CMSetSpec& spec,
                             const PenaltyConfig& cfg, const Vector& x);

// L/2: any strictly larger lambda makes f - lambda||x||^2 strictly concave
// on the hull. Throws std::domain_error when L is unknown (MaxAffine);
// use exactness_threshold instead.
double concavify_threshold(const ProblemSpec& prob, const CMSetSpec& spec);

// K * nu(spec): any strictly larger lambda gives exact penalization for the
// catalogued sets. Throws std::domain_error for NonnegSemiOrthogonal, whose
// guarantee is only inexact.
double exactness_threshold(const ProblemSpec& prob, const CMSetSpec& spec);

}  // namespace expp
