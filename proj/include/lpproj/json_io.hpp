#pragma once

#include <string>

#include <json.hpp>

#include "lpproj/lp_function.hpp"
#include "lpproj/polytope.hpp"

namespace lpproj {

// {"n": int, "vertices": [["p/q", ...], ...]}; rationals are strings "p/q"
// or "p". Reading takes the convex hull of the listed points.
nlohmann::json to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

// {"p": float, "n": int, "terms": [{"dir": [ints], "sign": "+"|"-", "coef": float}]}
nlohmann::json to_json(const LpFunction& f);
LpFunction lp_function_from_json(const nlohmann::json& j);

// {"pos": LpFunction, "neg": LpFunction}. Reading also accepts a bare
// LpFunction document, taken as the positive part.
nlohmann::json to_json(const SignedLpFunction& f);
SignedLpFunction signed_from_json(const nlohmann::json& j);

// Parse helpers that turn any JSON or schema failure into ParseError.
nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace lpproj
