#pragma once
#include <cstdint>
#include <string>

#include <json.hpp>

#include "core/rational.hpp"

namespace gp {

using Json = nlohmann::json;

// exact rational from "p/q", decimal string, or JSON number
Rat rat_from_json(const Json& j);
Rat rat_from_string(const std::string& s);
Json rat_to_json(const Rat& r);  // "p/q" string

uint64_t fnv1a(const std::string& s);
std::string hex64(uint64_t x);

}  // namespace gp
