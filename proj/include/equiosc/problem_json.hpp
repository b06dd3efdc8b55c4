#pragma once

#include <string>

#include "equiosc/problem.hpp"
#include "json.hpp"

namespace equiosc {

using Json = nlohmann::json;

Json kernel_to_json(const KernelSpec& k);
KernelSpec kernel_from_json(const Json& j);

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

/// {"n", "r", "kernel": {"variant", "params"}, "field": {"pieces",
/// "point_values"}}.
Json problem_to_json(const Problem& p);

/// Throws ValidationError for malformed documents, including JSON type
/// errors and an "n" that disagrees with "r".
Problem problem_from_json(const Json& j);

Problem load_problem(const std::string& path);

/// -inf becomes null.
Json ext_to_json(ExtReal v);

}  // namespace equiosc
