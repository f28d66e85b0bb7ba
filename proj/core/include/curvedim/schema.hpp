#ifndef CURVEDIM_SCHEMA_HPP
#define CURVEDIM_SCHEMA_HPP

#include <json.hpp>

#include <string>

namespace curvedim {

/// Structural validation against the subset of JSON Schema the shipped
/// schema files use: type, required, properties, items, enum,
/// additionalProperties (schema form). Returns false and fills `error` on
/// the first violation.
bool validate_json(const nlohmann::json& doc, const nlohmann::json& schema, std::string* error);

} // namespace curvedim

#endif
