#pragma once

// JSON and CSV encodings of the library's value types.
//
// Field elements are packed integers (base-p digits, constant term lowest);
// parsers also accept the coefficient array form.

#include <json.hpp>
#include <string>
#include <vector>

#include "pgap/ag_codes.hpp"
#include "pgap/curve.hpp"
#include "pgap/riemann_roch.hpp"

namespace pgap {

using json = nlohmann::json;

json field_spec_to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);

Elem elem_from_json(const Field& field, const json& j);

/// {"p", "k", "modulus"?, "n", "g_coeffs": [[e1, e2, e3, coeff], ...]}
json curve_spec_to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const json& j);
/// Reads a curve file; failures raise ErrorCode::io.
CurveSpec load_curve_file(const std::string& path);

json divisor_to_json(const ThreePointDivisor& d);
ThreePointDivisor divisor_from_json(const json& j);

json rr_space_to_json(const RRSpace& space);
json point_to_json(const ProjectivePoint& pt);
json matrix_to_json(const Matrix& m);

/// Row-major CSV; each entry is the element's coefficient vector joined by ';'
/// (a plain integer over a prime field).
std::string matrix_to_csv(const Matrix& m);
std::string points_to_csv(const Field& field, const std::vector<ProjectivePoint>& points);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
void append_text_file(const std::string& path, const std::string& text);

}  // namespace pgap
