#pragma once

#include <string>
#include <vector>

#include "expp/types.hpp"

namespace expp {

// Constraint families. Every member of a set has the same squared norm C.
enum class Family {
    Binary,                // {-1,1}^n
    MPSK,                  // m equally spaced unit-modulus complex points, stored as (re, im)
    UnitSphere,            // ||x|| = 1
    SemiOrthogonal,        // X'X = I, n >= r
    UnitVector,            // {e_1,...,e_n}
    SelectionVector,       // binary with exactly kappa ones
    PartialPermutation,    // binary, unit column sums, row sums <= 1
    SizeAssignment,        // binary, column sums kappa_j, row sums <= 1
    NonnegSemiOrthogonal,  // X'X = I, X >= 0
    Product,               // cartesian product of CM sets
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct CMSetSpec {
    Family family = Family::Binary;
    int n = 0;                      // ambient rows
    int r = 0;                      // columns (matrix families)
    int m = 0;                      // MPSK order
    std::vector<int> kappa;         // column sizes (SelectionVector uses kappa[0])
    std::vector<CMSetSpec> factors; // Product only

    // Throws std::invalid_argument on malformed specs.
    void validate() const;

    // Flat real dimension of the ambient space. Matrix families are
    // vectorized column-major; MPSK scalars contribute (re, im) pairs.
    int ambient_dim() const;

    // Squared modulus C: ||v||^2 for every member v.
    double modulus_sq() const;

    // True for families whose member list is finite.
    bool finite_family() const;

    static CMSetSpec binary(int n);
    static CMSetSpec mpsk(int m);
    static CMSetSpec unit_sphere(int n);
    static CMSetSpec semi_orthogonal(int n, int r);
    static CMSetSpec unit_vector(int n);
    static CMSetSpec selection_vector(int n, int kappa);
    static CMSetSpec partial_permutation(int n, int r);
    static CMSetSpec size_assignment(int n, std::vector<int> kappa);
    static CMSetSpec nonneg_semi_orthogonal(int n, int r);
    static CMSetSpec product(std::vector<CMSetSpec> factors);
};

double modulus_sq(const CMSetSpec& spec);

inline constexpr double kFeasTol = 1e-8;  // default absolute tolerance per scalar constraint

// Membership in the CM set V itself.
bool contains(const CMSetSpec& spec, const Vector& x, double tol = kFeasTol);

// Nearest (or feasibly repaired) member of V. Exact Euclidean projection for
// Binary, MPSK, UnitSphere, SemiOrthogonal, UnitVector and SelectionVector;
// greedy repair for the assignment families; support extraction plus
// column normalization for NonnegSemiOrthogonal. Ties are deterministic:
// zero onto the sphere gives e_1, equal top-k candidates go to the lowest
// index, an MPSK angle on a sector boundary goes to the lower sector.
Vector round_to_set(const CMSetSpec& spec, const Vector& x);

struct DistanceResult {
    double value = 0.0;
    bool exact = true;  // false when only an upper bound via round_to_set
};

// Euclidean distance to V. Exact where round_to_set is an exact projection;
// assignment and non-negative semi-orthogonal families fall back to oracle
// enumeration below a size threshold and to a flagged upper bound above it.
DistanceResult distance_to_set(const CMSetSpec& spec, const Vector& x);

// Membership in conv(V) (for NonnegSemiOrthogonal: in the surrogate
// B+ = spectral ball intersect nonnegative orthant).
bool hull_contains(const CMSetSpec& spec, const Vector& x, double tol = kFeasTol);

// Projection onto conv(V) (B+ surrogate for NonnegSemiOrthogonal).
Vector project_hull(const CMSetSpec& spec, const Vector& z);

// Sharpest catalogued error bound on dist(x, V) for x in the hull.
// Throws std::domain_error when x is outside the hull.
double error_bound_tight(const CMSetSpec& spec, const Vector& x);

// Norm-deficit form nu * (C - ||x||^2); NonnegSemiOrthogonal uses
// 5 r^{3/4} sqrt(C - ||x||^2).
double error_bound_norm(const CMSetSpec& spec, const Vector& x);

// sqrt(max(0, C - ||x||^2)): valid for every CM set.
double universal_bound(const CMSetSpec& spec, const Vector& x);

// The per-family constant nu in the norm-deficit bound. Throws for
// NonnegSemiOrthogonal (no linear-deficit bound exists for it).
double nu_value(const CMSetSpec& spec);

// Sum of the kappa largest components.
double max_k_sum(const Vector& x, int k);

}  // namespace expp
