#include "curvedim/schema.hpp"

namespace curvedim {

namespace {

using nlohmann::json;

bool validate_node(const json& doc, const json& schema, const std::string& path, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = path + ": " + msg;
        return false;
    };

    if (schema.contains("type")) {
        const std::string t = schema["type"].get<std::string>();
        bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                  (t == "string" && doc.is_string()) ||
                  (t == "integer" && doc.is_number_integer()) ||
                  (t == "number" && doc.is_number()) || (t == "boolean" && doc.is_boolean());
        if (!ok) return fail("expected type " + t);
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& v : schema["enum"])
            if (v == doc) found = true;
        if (!found) return fail("value not in enum");
    }
    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!doc.contains(k.get<std::string>()))
                    return fail("missing required field '" + k.get<std::string>() + "'");
        if (schema.contains("properties")) {
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
                if (!doc.contains(it.key())) continue;
                if (!validate_node(doc[it.key()], it.value(), path + "/" + it.key(), error))
                    return false;
            }
        }
        if (schema.contains("additionalProperties") && schema["additionalProperties"].is_object()) {
            const json& sub = schema["additionalProperties"];
            for (auto it = doc.begin(); it != doc.end(); ++it) {
                if (schema.contains("properties") && schema["properties"].contains(it.key())) continue;
                if (!validate_node(it.value(), sub, path + "/" + it.key(), error)) return false;
            }
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        size_t i = 0;
        for (const auto& v : doc) {
            if (!validate_node(v, schema["items"], path + "/" + std::to_string(i), error))
                return false;
            ++i;
        }
    }
    return true;
}

} // namespace

bool validate_json(const nlohmann::json& doc, const nlohmann::json& schema, std::string* error) {
    return validate_node(doc, schema, "$", error);
}

} // namespace curvedim
