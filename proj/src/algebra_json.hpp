#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "algebra.hpp"
#include "jets.hpp"

namespace voa {

// Algebra-spec file format:
//   {"generators":[{"name":..,"parity":"even"|"odd","weight2x":..}],
//    "field":{"kind":"rational"} | {"kind":"ratfunc","param":".."},
//    "brackets":[{"a":..,"b":..,"j":..,
//                 "terms":[{"gen":..,"dz":..,"coeff":".."}],"central":".."}]}
// Generators in brackets may be referenced by name or by index; coefficients
// are strings "p/q" or rational-function expressions in the parameter.
AlgebraPtr algebra_from_json(const nlohmann::json& j);
AlgebraPtr algebra_from_json_text(const std::string& text);
AlgebraPtr algebra_from_file(const std::string& path);
nlohmann::json algebra_to_json(const AlgebraPtr& h);

// Presentation file format:
//   {"vars":[{"name":..,"weight2x":..}], "relations":["w^2 - l^2*w", ...]}
Presentation presentation_from_json(const nlohmann::json& j);
Presentation presentation_from_file(const std::string& path);
nlohmann::json presentation_to_json(const Presentation& p);

}  // namespace voa
