#pragma once

#include "linlef/nilshadow.hpp"
#include "linlef/torus.hpp"

#include <json.hpp>

#include <string>

namespace linlef::json {

using nlohmann::json;

// All parse_* functions throw InputError prefixed with the JSON-pointer path
// of the offending value, e.g. "/algebra/brackets/2/result: ...".

Rational parse_rational(const json& j, const std::string& path);
json to_json(const Rational& r);

// Array of rows; every row an array of rational strings.
Matrix parse_matrix(const json& j, const std::string& path);
json to_json(const Matrix& m);
json to_json(const Vector& v);

// { "dim": n, "basis": [...], "brackets": [ { "left": i, "right": j, "result": { "k": "q" } } ] }
LieAlgebra parse_algebra(const json& j, const std::string& path);
json to_json(const LieAlgebra& algebra);

// { "matrix": [[...]] }, column j = image of e_j.
LieMorphism parse_endomorphism(const json& j, const LieAlgebra& algebra, const std::string& path);

// { "dim": m, "actions": [ [[...]], ... ] }
Representation parse_representation(const json& j, const LieAlgebra& algebra, const std::string& path);
json to_json(const Representation& v);

// { "algebra": {...}?, "nil_ideal": [...], "complement": [...] }. When the
// document carries no algebra, `algebra` is used.
SplitPresentation parse_split(const json& j, const LieAlgebra& algebra, const std::string& path);
json to_json(const SplitPresentation& split);

json cohomology_report(const std::vector<std::size_t>& betti, const std::vector<std::size_t>& dims,
                       const std::vector<Matrix>* maps);
json lefschetz_report(const LefschetzReport& report, const std::vector<std::size_t>& dims);
json shadow_report(const ShadowLinearization& result);
json torus_report(const TorusCrossCheck& check);

} // namespace linlef::json
