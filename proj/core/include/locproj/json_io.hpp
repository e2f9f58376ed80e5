#pragma once

#include <nlohmann/json.hpp>

#include "locproj/projection.hpp"

namespace locproj::json_io {

using nlohmann::json;

// Characters serialize as arrays of {"coeff": decimal-string, "exps": [ints]};
// rational characters add a "den" list of {"exps", "mult"} factors. Big
// integers always travel as decimal strings.
json to_json(const Character& c);
Character character_from_json(const json& j, std::size_t rank);

json to_json(const RationalCharacter& r);
RationalCharacter rational_character_from_json(const json& j, std::size_t rank);

json to_json(const plethysm::SymFun& f);
plethysm::SymFun symfun_from_json(const json& j);

json to_json(const grassmann::WeightList& w);
grassmann::WeightList weight_list_from_json(const json& j);

json to_json(const Truncation& t);
json to_json(const grassmann::IdentityReport& r);
json to_json(const projection::ConditionReport& r);
json to_json(const projection::VerificationReport& r);

/// User spec: the series-module schema plus {"n", "m", "f", "grading"}.
models::ExampleSpec spec_from_json(const json& j);
models::ExampleSpec load_spec_file(const std::string& path);

} // namespace locproj::json_io
