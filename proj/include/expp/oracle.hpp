#pragma once

#include <cstddef>
#include <vector>

#include "expp/cm_sets.hpp"
#include "expp/objectives.hpp"

namespace expp {

struct EnumerationBudget {
    std::size_t max_points = 1'000'000;
};

// Number of members of a finite family (closed form); throws for infinite
// families. Returned as double to survive large counts.
double member_count(const CMSetSpec& spec);

// All members of a finite family, exactly once, in a deterministic order.
// Throws std::invalid_argument for infinite families and std::runtime_error
// when the count exceeds the budget.
std::vector<Vector> enumerate_set(const CMSetSpec& spec,
                                  const EnumerationBudget& budget = {});

struct BruteMinResult {
    Vector x;
    double value = 0.0;
};

// Exact minimizer of f over V by enumeration; lowest enumeration index wins ties.
BruteMinResult brute_min(const ProblemSpec& prob, const CMSetSpec& spec,
                         const EnumerationBudget& budget = {});

// Exact min distance from x to V by enumeration.
double brute_dist(const CMSetSpec& spec, const Vector& x,
                  const EnumerationBudget& budget = {});

// Exact distance from X (n x r) to the non-negative semi-orthogonal set by
// enumerating support partitions; (r+1)^n must stay within the budget.
double nonneg_semiorth_dist(const Matrix& X, const EnumerationBudget& budget = {});

struct CounterexampleGap {
    double dist = 0.0;
    double lower = 0.0;
};

// The two-point set {e^{-j phi}, e^{j phi}}: exact distance from a point on
// the connecting segment, and the lower bound (1 - |x|^2) / (2 sin phi).
// Asserts dist >= lower - 1e-12; throws if x is off the segment.
CounterexampleGap counterexample_gap(double phi, Complex x);

// Max relative error between the analytic gradient and central differences.
double fd_gradient_check(const ProblemSpec& prob, const Vector& x, double h = 1e-5);

}  // namespace expp
