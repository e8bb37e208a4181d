#pragma once

#include <string>

#include <json.hpp>

#include "zorbit/exact.hpp"

namespace zorbit {

using json = nlohmann::json;

// Accepts only the canonical form produced by mpq_class::get_str: "a" or "a/b" with b > 1, gcd 1, no '+', no leading zeros.
mpq_class parse_rational(const std::string& s);

json to_json(const Scalar& s);
json to_json(const Matrix& m);
Scalar scalar_from_json(const json& j, Field f);
Matrix matrix_from_json(const json& j, Field f);

}  // namespace zorbit
