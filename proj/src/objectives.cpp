#include "expp/objectives.hpp"

#include <cmath>
#include <stdexcept>

#include "expp/solver.hpp"

namespace expp {

std::string objective_kind_name(ObjectiveKind k) {
    switch (k) {
        case ObjectiveKind::Quadratic: return "quadratic";
        case ObjectiveKind::QuadForm: return "quad_form";
        case ObjectiveKind::MaxAffine: return "max_affine";
        case ObjectiveKind::TraceQuadratic: return "trace_quadratic";
        case ObjectiveKind::Constant: return "constant";
    }
    throw std::logic_error("objective_kind_name: unknown kind");
}

ObjectiveKind objective_kind_from_name(const std::string& name) {
    if (name == "quadratic") return ObjectiveKind::Quadratic;
    if (name == "quad_form") return ObjectiveKind::QuadForm;
    if (name == "max_affine") return ObjectiveKind::MaxAffine;
    if (name == "trace_quadratic") return ObjectiveKind::TraceQuadratic;
    if (name == "constant") return ObjectiveKind::Constant;
    throw std::invalid_argument("unknown objective kind: " + name);
}

void ProblemSpec::validate() const {
    switch (kind) {
        case ObjectiveKind::Quadratic:
            if (H.rows() != y.size())
                throw std::invalid_argument("quadratic: H rows must match y");
            break;
        case ObjectiveKind::QuadForm:
            if (A.rows() != A.cols() || A.rows() != b.size())
                throw std::invalid_argument("quad_form: A must be square and match b");
            break;
        case ObjectiveKind::MaxAffine:
            if (Arows.rows() != b.size())
                throw std::invalid_argument("max_affine: row count must match b");
            if (Arows.rows() == 0)
                throw std::invalid_argument("max_affine: needs at least one piece");
            break;
        case ObjectiveKind::TraceQuadratic:
            if (A.rows() != A.cols() || B.rows() != B.cols())
                throw std::invalid_argument("trace_quadratic: A, B must be square");
            if (Cmat.rows() != A.rows() || Cmat.cols() != B.rows())
                throw std::invalid_argument("trace_quadratic: C must be A.rows x B.rows");
            break;
        case ObjectiveKind::Constant:
            break;
    }
}

int ProblemSpec::dim() const {
    switch (kind) {
        case ObjectiveKind::Quadratic: return static_cast<int>(H.cols());
        case ObjectiveKind::QuadForm: return static_cast<int>(A.rows());
        case ObjectiveKind::MaxAffine: return static_cast<int>(Arows.cols());
        case ObjectiveKind::TraceQuadratic:
            return static_cast<int>(A.rows() * B.rows());
        case ObjectiveKind::Constant: return -1;  // any
    }
    throw std::logic_error("dim: unknown kind");
}

ProblemSpec ProblemSpec::quadratic(Matrix H, Vector y) {
    ProblemSpec p;
    p.kind = ObjectiveKind::Quadratic;
    p.H = std::move(H);
    p.y = std::move(y);
    p.validate();
    return p;
}

ProblemSpec ProblemSpec::quad_form(Matrix A, Vector b, double sign) {
    ProblemSpec p;
    p.kind = ObjectiveKind::QuadForm;
    p.A = std::move(A);
    p.b = std::move(b);
    p.sign = sign;
    p.validate();
    return p;
}

ProblemSpec ProblemSpec::max_affine(Matrix Arows, Vector b) {
    ProblemSpec p;
    p.kind = ObjectiveKind::MaxAffine;
    p.Arows = std::move(Arows);
    p.b = std::move(b);
    p.validate();
    return p;
}

ProblemSpec ProblemSpec::trace_quadratic(Matrix A, Matrix B, Matrix Cmat) {
    ProblemSpec p;
    p.kind = ObjectiveKind::TraceQuadratic;
    p.A = std::move(A);
    p.B = std::move(B);
    p.Cmat = std::move(Cmat);
    p.validate();
    return p;
}

ProblemSpec ProblemSpec::constant(double c) {
    ProblemSpec p;
    p.kind = ObjectiveKind::Constant;
    p.c = c;
    return p;
}

EvalResult eval(const ProblemSpec& prob, const Vector& x) {
    if (prob.dim() >= 0 && prob.dim() != x.size())
        throw std::invalid_argument("eval: dimension mismatch");
    EvalResult out;
    switch (prob.kind) {
        case ObjectiveKind::Quadratic: {
            const Vector res = prob.H * x - prob.y;
            out.value = res.squaredNorm();
            out.grad = 2.0 * (prob.H.transpose() * res);
            return out;
        }
        case ObjectiveKind::QuadForm: {
            const Vector Ax = prob.A * x;
            out.value = prob.sign * x.dot(Ax) + prob.b.dot(x);
            out.grad = 2.0 * prob.sign * Ax + prob.b;
            return out;
        }
        case ObjectiveKind::MaxAffine: {
            const Vector vals = prob.Arows * x + prob.b;
            int star = 0;
            for (int i = 1; i < vals.size(); ++i)
                if (vals[i] > vals[star]) star = i;
            out.value = vals[star];
            out.grad = prob.Arows.row(star).transpose();
            out.smooth = false;
            return out;
        }
        case ObjectiveKind::TraceQuadratic: {
            const int n = static_cast<int>(prob.A.rows());
            const int r = static_cast<int>(prob.B.rows());
            const auto X = as_matrix(x, n, r);
            const Matrix AXB = prob.A * X * prob.B;
            out.value = (X.transpose() * AXB).trace() + (prob.Cmat.transpose() * X).trace();
            out.grad = as_vector(2.0 * AXB + prob.Cmat);
            return out;
        }
        case ObjectiveKind::Constant:
            out.value = prob.c;
            out.grad = Vector::Zero(x.size());
            return out;
    }
    throw std::logic_error("eval: unknown kind");
}

Descriptors descriptors(const ProblemSpec& prob, const CMSetSpec& spec) {
    const double R = std::sqrt(spec.modulus_sq());
    Descriptors d;
    switch (prob.kind) {
        case ObjectiveKind::Quadratic: {
            const double s1 = estimate_spectral_norm(prob.H);
            d.L = 2.0 * s1 * s1;
            d.K = 2.0 * s1 * (s1 * R + prob.y.norm());
            return d;
        }
        case ObjectiveKind::QuadForm: {
            const double s1 = estimate_spectral_norm(prob.A);
            d.L = 2.0 * s1;
            d.K = 2.0 * s1 * R + prob.b.norm();
            return d;
        }
        case ObjectiveKind::MaxAffine: {
            double k = 0.0;
            for (int i = 0; i < prob.Arows.rows(); ++i)
                k = std::max(k, prob.Arows.row(i).norm());
            d.L = std::nullopt;
            d.K = k;
            return d;
        }
        case ObjectiveKind::TraceQuadratic: {
            const double sa = estimate_spectral_norm(prob.A);
            const double sb = estimate_spectral_norm(prob.B);
            d.L = 2.0 * sa * sb;
            d.K = 2.0 * sa * sb * R + prob.Cmat.norm();
            return d;
        }
        case ObjectiveKind::Constant:
            d.L = 0.0;
            d.K = 0.0;
            return d;
    }
    throw std::logic_error("descriptors: unknown kind");
}

}  // namespace expp
