#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expp/types.hpp"

namespace expp {

struct PropertyResult {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    bool informational = false;  // reported but not counted against the suite
    double worst = 0.0;          // worst observed slack (suite-specific meaning)

    bool passed() const { return informational || failures == 0; }
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_passed() const;
};

// Per-family error-bound chain dist <= tight <= norm (slack -1e-9), the
// universal bound dist <= sqrt(C - ||x||^2) + 1e-9, zero bounds on V, and
// the max-k-sum inequality s_kappa(x) >= ||x||^2 - 1e-12. Exact distances via
// closed form or enumeration.
SuiteReport check_error_bounds(std::uint64_t seed, std::size_t trials);

// Exact penalization on enumerable instances: quadratic at
// lambda = sigma_1(H)^2 + 1 and max-affine at lambda = K nu + 1 agree with
// the brute-force optimum over V; at n = 2 a 201x201 grid finds nothing
// below the vertex optimum. Also reports an informational below-threshold
// probe. trials = instances per objective family.
SuiteReport check_penalization(std::uint64_t seed, std::size_t trials);

// Projector properties: idempotence (1e-9), non-expansiveness (1e-9),
// variational inequality against sampled extreme points (-1e-7), capped
// simplex vs dense tau-scan, simplex/capped-simplex kappa=1 agreement,
// MPSK half-space vs sector membership on a disc grid, assignment hull vs
// a vertex-weight QP oracle, MPSK projector vs grid scan.
SuiteReport check_projections(std::uint64_t seed, std::size_t trials);

// Two-point-set counterexample battery on (phi, beta) samples plus the
// phi = 1e-3 midpoint ratio exceeding 100.
SuiteReport check_counterexample(std::uint64_t seed, std::size_t trials);

// Midpoint concavity at lambda = L/2 + 0.1, midpoint convexity at
// lambda = -L/2 - 0.1, and the |x| instance failing concavity for all
// tested lambda <= 100.
SuiteReport check_concavity(std::uint64_t seed, std::size_t trials);

}  // namespace expp
