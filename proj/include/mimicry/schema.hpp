#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mimicry {

/// Validates `instance` against a JSON Schema document. Supports the subset
/// used by the shipped schema: type, properties, required,
/// additionalProperties, items, enum, const, minimum, maximum, minItems,
/// maxItems, anyOf and local $ref into definitions or $defs. Returns one
/// message per violation, each prefixed with a JSON pointer.
std::vector<std::string> validate_json(const nlohmann::json& instance, const nlohmann::json& schema);

}  // namespace mimicry
