#pragma once

// Text and JSON forms of rational polynomials used by fixtures and reports.

#include <string>
#include <string_view>

#include <json.hpp>

#include "m24/exact/poly.hpp"

namespace m24 {

/// "c0 + c1*X + c2*X^2 + ..." with zero terms omitted; "0" for the zero polynomial.
std::string format_poly(const QPoly& p, std::string_view var = "X");

/// Inverse of format_poly. Terms may appear in any order and repeat; accepted
/// shapes are "c", "c*X", "c*X^k", "X^k", "-X" with c an integer or p/q.
QPoly parse_poly(std::string_view text, std::string_view var = "X");

/// ["c0", "c1", ...], index = degree.
nlohmann::json poly_to_json(const QPoly& p);
QPoly poly_from_json(const nlohmann::json& j);

}  // namespace m24
