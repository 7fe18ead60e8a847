#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "vosa/half_int.hpp"
#include "vosa/lie_data.hpp"
#include "vosa/linalg.hpp"
#include "vosa/scalar.hpp"

namespace vosa {

// [{"num": int, "den": int, "rad": int}, ...]; zero is [].
nlohmann::json scalar_to_json(const Scalar& s);
// Also accepts a bare number or a string such as "5/2".
Scalar scalar_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

// {"name", "dim", "gamma": [{"a","b","c","val"}]} with a < b listed once,
// completed antisymmetrically. Throws std::invalid_argument on malformed data.
LieAlgebraData lie_algebra_from_json(const nlohmann::json& j);
nlohmann::json lie_algebra_to_json(const LieAlgebraData& d);

HalfInt half_int_from_json(const nlohmann::json& j);

}  // namespace vosa
