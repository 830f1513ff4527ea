#pragma once

#include <json.hpp>

#include "knotfog/classical.hpp"
#include "knotfog/fog.hpp"
#include "knotfog/laurent.hpp"
#include "knotfog/matrix.hpp"

namespace knotfog {

// Integers that fit in 64 bits are written as JSON numbers, larger ones as
// decimal strings. Readers accept both.
nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const LaurentPoly& p);  // {"min_degree": int, "coeffs": [int]}
nlohmann::json to_json(const IntMatrix& m);    // row-major array of arrays
nlohmann::json to_json(const IntInterval& i);  // {"lo": int, "hi": int|null}
nlohmann::json to_json(const KnotFacts& f);
nlohmann::json to_json(const FogResult& r);

// Throw std::invalid_argument on malformed input.
Integer integer_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);
IntMatrix matrix_from_json(const nlohmann::json& j);

} // namespace knotfog
