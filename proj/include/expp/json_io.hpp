#pragma once

#include <string>

#include <json.hpp>

#include "expp/cm_sets.hpp"
#include "expp/objectives.hpp"
#include "expp/solver.hpp"

namespace expp {

using Json = nlohmann::ordered_json;

Json to_json(const CMSetSpec& spec);
CMSetSpec set_from_json(const Json& j);

Json to_json(const ProblemSpec& prob);
ProblemSpec problem_from_json(const Json& j);

struct Instance {
    std::string id;
    ProblemSpec objective;
    CMSetSpec set;
};

// Instance schema: {"schema": 1, "id"?: str, "objective": {...}, "set": {...}}
Instance instance_from_json(const Json& j);
Json to_json(const Instance& inst);

// Points are flat arrays; matrix families are column-major.
Json point_to_json(const Vector& x);
Vector point_from_json(const Json& j, int expected_dim = -1);

Json to_json(const SolveResult& res);

Json load_json_file(const std::string& path);

}  // namespace expp
