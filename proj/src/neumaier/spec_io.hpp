#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "neumaier/group.hpp"

namespace neumaier {

// Group description objects:
//   {"kind": "cyclic", "n": 35}
//   {"kind": "dihedral", "m": 8}                      order 2m
//   {"kind": "product", "factors": [ ... ]}
//   {"kind": "permutation", "degree": 4, "generators": ["(1,2,3,4)", [1,0,2,3]],
//    "cycle_base": 1}
// Every kind accepts an optional "names" array renaming the generators.
GroupTable group_from_json(const nlohmann::json& spec);
// Parses JSON text first; malformed text raises parse_error.
GroupTable group_from_text(std::string_view text);

// {"elements": ["a", "a^-1", ...]} or a bare array of words.
std::vector<std::string> set_words_from_json(const nlohmann::json& spec);
std::vector<std::string> set_words_from_text(std::string_view text);

nlohmann::json parse_json_text(std::string_view text);

}  // namespace neumaier
