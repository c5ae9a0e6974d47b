#include "expp/penalties.hpp"

#include <cmath>
#include <stdexcept>

namespace expp {

std::string penalty_kind_name(PenaltyKind k) {
    switch (k) {
        case PenaltyKind::NegSquare: return "neg_square";
        case PenaltyKind::SqrtDeficit: return "sqrt_deficit";
        case PenaltyKind::SquaredDeficit: return "squared_deficit";
    }
    throw std::logic_error("penalty_kind_name: unknown kind");
}

PenaltyKind penalty_kind_from_name(const std::string& name) {
    if (name == "neg_square") return PenaltyKind::NegSquare;
    if (name == "sqrt_deficit") return PenaltyKind::SqrtDeficit;
    if (name == "squared_deficit") return PenaltyKind::SquaredDeficit;
    throw std::invalid_argument("unknown penalty kind: " + name);
}

void PenaltyConfig::validate() const {
    if (!std::isfinite(lambda))
        throw std::invalid_argument("penalty: lambda must be finite");
    if (kind != PenaltyKind::NegSquare && lambda < 0.0)
        throw std::invalid_argument("penalty: deficit penalties require lambda >= 0");
}

PenalizedEval eval_penalized(const ProblemSpec& prob, const CMSetSpec& spec,
                             const PenaltyConfig& cfg, const Vector& x) {
    cfg.validate();
    const auto base = eval(prob, x);
    if (!std::isfinite(base.value))
        throw std::domain_error("eval_penalized: objective is not finite");
    PenalizedEval out;
    out.smooth = base.smooth;
    const double nsq = x.squaredNorm();
    const double C = spec.modulus_sq();
    switch (cfg.kind) {
        case PenaltyKind::NegSquare:
            out.value = base.value - cfg.lambda * nsq;
            out.grad = base.grad - 2.0 * cfg.lambda * x;
            return out;
        case PenaltyKind::SquaredDeficit:
            out.value = base.value + cfg.lambda * (C - nsq);
            out.grad = base.grad - 2.0 * cfg.lambda * x;
            return out;
        case PenaltyKind::SqrtDeficit: {
            const double deficit = std::max(0.0, C - nsq);
            const double root = std::sqrt(deficit);
            out.value = base.value + cfg.lambda * root;
            if (deficit <= 1e-14) {
                // non-Lipschitz at the boundary; let the caller switch form
                out.has_grad = false;
                out.grad = base.grad;
                return out;
            }
            out.grad = base.grad - (cfg.lambda / root) * x;
            out.smooth = false;
            return out;
        }
    }
    throw std::logic_error("eval_penalized: unknown kind");
}

double concavify_threshold(const ProblemSpec& prob, const CMSetSpec& spec) {
    const auto d = descriptors(prob, spec);
    if (!d.L)
        throw std::domain_error(
            "concavify_threshold: gradient Lipschitz constant unknown for this "
            "objective; use exactness_threshold");
    return *d.L / 2.0;
}

double exactness_threshold(const ProblemSpec& prob, const CMSetSpec& spec) {
    const double nu = nu_value(spec);  // throws for NonnegSemiOrthogonal
    return descriptors(prob, spec).K * nu;
}

}  // namespace expp
