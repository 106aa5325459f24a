#pragma once

#include <json.hpp>

#include "pqt/multipoly.hpp"
#include "pqt/series.hpp"

namespace pqt {

// [{"exponents": {"p": 1, "x": 2}, "coeff": "3"}, ...] in graded order.
// Only positive exponents are listed; coefficients are decimal strings.
nlohmann::json poly_to_json(const MultiPoly& a);

// Inverse of poly_to_json. Missing exponents read as 0 and repeated
// monomials accumulate. Throws std::invalid_argument on unknown variables,
// negative exponents or non-integer coefficients.
MultiPoly poly_from_json(const nlohmann::json& j);

// List of polynomials, entry n being the coefficient of t^n/n!.
nlohmann::json series_to_json(const EgfSeries& s);
EgfSeries series_from_json(const nlohmann::json& j);

}  // namespace pqt
