#include "expp/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace expp {

namespace {

Json matrix_to_json(const Matrix& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::invalid_argument(std::string(what) + ": expected a nested array");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    Matrix M(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument(std::string(what) + ": ragged rows");
        for (int c = 0; c < cols; ++c) M(i, c) = j[i][c].get<double>();
    }
    return M;
}

Vector vector_from_json(const Json& j, const char* what) {
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + ": expected an array");
    Vector v(static_cast<int>(j.size()));
    for (int i = 0; i < v.size(); ++i) v[i] = j[i].get<double>();
    return v;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

}  // namespace

Json to_json(const CMSetSpec& spec) {
    Json j;
    j["family"] = family_name(spec.family);
    switch (spec.family) {
        case Family::Binary:
        case Family::UnitSphere:
        case Family::UnitVector:
            j["n"] = spec.n;
            break;
        case Family::MPSK:
            j["m"] = spec.m;
            break;
        case Family::SemiOrthogonal:
        case Family::PartialPermutation:
        case Family::NonnegSemiOrthogonal:
            j["n"] = spec.n;
            j["r"] = spec.r;
            break;
        case Family::SelectionVector:
            j["n"] = spec.n;
            j["kappa"] = spec.kappa;
            break;
        case Family::SizeAssignment:
            j["n"] = spec.n;
            j["r"] = spec.r;
            j["kappa"] = spec.kappa;
            break;
        case Family::Product: {
            Json fs = Json::array();
            for (const auto& f : spec.factors) fs.push_back(to_json(f));
            j["factors"] = std::move(fs);
            break;
        }
    }
    return j;
}

CMSetSpec set_from_json(const Json& j) {
    CMSetSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.n = j.value("n", 0);
    spec.r = j.value("r", 0);
    spec.m = j.value("m", 0);
    if (j.contains("kappa")) spec.kappa = j["kappa"].get<std::vector<int>>();
    if (spec.family == Family::SizeAssignment && spec.r == 0)
        spec.r = static_cast<int>(spec.kappa.size());
    if (j.contains("factors"))
        for (const auto& f : j["factors"]) spec.factors.push_back(set_from_json(f));
    spec.validate();
    return spec;
}

Json to_json(const ProblemSpec& prob) {
    Json j;
    j["kind"] = objective_kind_name(prob.kind);
    switch (prob.kind) {
        case ObjectiveKind::Quadratic:
            j["H"] = matrix_to_json(prob.H);
            j["y"] = vector_to_json(prob.y);
            break;
        case ObjectiveKind::QuadForm:
            j["A"] = matrix_to_json(prob.A);
            j["b"] = vector_to_json(prob.b);
            j["sign"] = prob.sign;
            break;
        case ObjectiveKind::MaxAffine:
            j["A"] = matrix_to_json(prob.Arows);
            j["b"] = vector_to_json(prob.b);
            break;
        case ObjectiveKind::TraceQuadratic:
            j["A"] = matrix_to_json(prob.A);
            j["B"] = matrix_to_json(prob.B);
            j["C"] = matrix_to_json(prob.Cmat);
            break;
        case ObjectiveKind::Constant:
            j["c"] = prob.c;
            break;
    }
    return j;
}

ProblemSpec problem_from_json(const Json& j) {
    const auto kind = objective_kind_from_name(j.at("kind").get<std::string>());
    switch (kind) {
        case ObjectiveKind::Quadratic:
            return ProblemSpec::quadratic(matrix_from_json(j.at("H"), "H"),
                                          vector_from_json(j.at("y"), "y"));
        case ObjectiveKind::QuadForm:
            return ProblemSpec::quad_form(matrix_from_json(j.at("A"), "A"),
                                          vector_from_json(j.at("b"), "b"),
                                          j.value("sign", 1.0));
        case ObjectiveKind::MaxAffine:
            return ProblemSpec::max_affine(matrix_from_json(j.at("A"), "A"),
                                           vector_from_json(j.at("b"), "b"));
        case ObjectiveKind::TraceQuadratic:
            return ProblemSpec::trace_quadratic(matrix_from_json(j.at("A"), "A"),
                                                matrix_from_json(j.at("B"), "B"),
                                                matrix_from_json(j.at("C"), "C"));
        case ObjectiveKind::Constant:
            return ProblemSpec::constant(j.value("c", 0.0));
    }
    throw std::logic_error("problem_from_json: unknown kind");
}

Instance instance_from_json(const Json& j) {
    if (j.value("schema", 1) != 1)
        throw std::invalid_argument("instance: unsupported schema version");
    Instance inst;
    inst.id = j.value("id", std::string("instance"));
    inst.objective = problem_from_json(j.at("objective"));
    inst.set = set_from_json(j.at("set"));
    const int want = inst.objective.dim();
    if (want >= 0 && want != inst.set.ambient_dim())
        throw std::invalid_argument("instance: objective dimension " + std::to_string(want) +
                                    " does not match set ambient dimension " +
                                    std::to_string(inst.set.ambient_dim()));
    return inst;
}

Json to_json(const Instance& inst) {
    Json j;
    j["schema"] = 1;
    j["id"] = inst.id;
    j["objective"] = to_json(inst.objective);
    j["set"] = to_json(inst.set);
    return j;
}

Json point_to_json(const Vector& x) { return vector_to_json(x); }

Vector point_from_json(const Json& j, int expected_dim) {
    Vector v = vector_from_json(j, "point");
    if (expected_dim >= 0 && v.size() != expected_dim)
        throw std::invalid_argument("point: expected dimension " +
                                    std::to_string(expected_dim) + ", got " +
                                    std::to_string(v.size()));
    return v;
}

Json to_json(const SolveResult& res) {
    Json j;
    j["f_rounded"] = res.f_rounded;
    j["f_hull"] = res.f_hull;
    j["rounded"] = vector_to_json(res.rounded);
    j["hull_point"] = vector_to_json(res.hull_point);
    j["feas_residual"] = res.feas_residual;
    j["feas_exact"] = res.feas_exact;
    Json stages = Json::array();
    for (const auto& st : res.stage_trace) {
        Json s;
        s["lambda"] = st.lambda;
        s["iterations"] = st.iterations;
        s["F"] = st.penalized_value;
        stages.push_back(std::move(s));
    }
    j["stages"] = std::move(stages);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace expp
