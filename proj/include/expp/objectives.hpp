#pragma once

#include <optional>

#include "expp/cm_sets.hpp"
#include "expp/types.hpp"

namespace expp {

enum class ObjectiveKind {
    Quadratic,       // ||y - H x||^2
    QuadForm,        // sign * x'Ax + b'x
    MaxAffine,       // max_i a_i'x + b_i
    TraceQuadratic,  // tr(X'AXB) + tr(C'X), X is n x r
    Constant,
};

std::string objective_kind_name(ObjectiveKind k);
ObjectiveKind objective_kind_from_name(const std::string& name);

struct ProblemSpec {
    ObjectiveKind kind = ObjectiveKind::Constant;
    // Quadratic
    Matrix H;
    Vector y;
    // QuadForm
    Matrix A;
    Vector b;
    double sign = 1.0;
    // MaxAffine: rows of Arows are the a_i, b holds the offsets
    Matrix Arows;
    // TraceQuadratic
    Matrix B;
    Matrix Cmat;
    // Constant
    double c = 0.0;

    void validate() const;
    int dim() const;  // expected ambient dimension (flat)

    static ProblemSpec quadratic(Matrix H, Vector y);
    static ProblemSpec quad_form(Matrix A, Vector b, double sign = 1.0);
    static ProblemSpec max_affine(Matrix Arows, Vector b);
    static ProblemSpec trace_quadratic(Matrix A, Matrix B, Matrix Cmat);
    static ProblemSpec constant(double c);
};

struct EvalResult {
    double value = 0.0;
    Vector grad;        // gradient, or a subgradient at kinks
    bool smooth = true; // false for MaxAffine
};

// Value and (sub)gradient. MaxAffine returns the row of the lowest
// max-attaining index at ties.
EvalResult eval(const ProblemSpec& prob, const Vector& x);

struct Descriptors {
    std::optional<double> L;  // Lipschitz constant of the gradient, absent for MaxAffine
    double K = 0.0;           // Lipschitz constant of f over the hull
};

// Smoothness descriptors relative to the hull of spec (radius sqrt(C)).
Descriptors descriptors(const ProblemSpec& prob, const CMSetSpec& spec);

}  // namespace expp
