#pragma once

// Minimal JSON-Schema checker covering the subset used by the schemas in
// docs/schemas: type / properties / required / items / enum /
// additionalProperties / minimum.

#include <string>
#include <vector>

#include "json.hpp"

namespace testsupport {

inline bool schema_type_matches(const nlohmann::json& value,
                                const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  return false;
}

inline void schema_validate(const nlohmann::json& schema,
                            const nlohmann::json& value,
                            const std::string& path,
                            std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const nlohmann::json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = schema_type_matches(value, t.get<std::string>());
    } else {
      for (const auto& alt : t) {
        if (schema_type_matches(value, alt.get<std::string>())) ok = true;
      }
    }
    if (!ok) {
      errors.push_back(path + ": type mismatch (" + value.type_name() + ")");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"]) {
      if (alt == value) ok = true;
    }
    if (!ok) errors.push_back(path + ": value not in enum");
  }
  if (schema.contains("minimum") && value.is_number()) {
    if (value.get<double>() < schema["minimum"].get<double>()) {
      errors.push_back(path + ": below minimum");
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          errors.push_back(path + ": missing required key " +
                           key.get<std::string>());
        }
      }
    }
    const bool allow_extra = !schema.contains("additionalProperties") ||
                             schema["additionalProperties"].get<bool>();
    for (auto it = value.begin(); it != value.end(); ++it) {
      const bool described =
          schema.contains("properties") && schema["properties"].contains(it.key());
      if (described) {
        schema_validate(schema["properties"][it.key()], it.value(),
                        path + "/" + it.key(), errors);
      } else if (!allow_extra) {
        errors.push_back(path + ": unexpected key " + it.key());
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    int idx = 0;
    for (const auto& item : value) {
      schema_validate(schema["items"], item,
                      path + "[" + std::to_string(idx++) + "]", errors);
    }
  }
}

inline std::vector<std::string> check_against_schema(
    const nlohmann::json& schema, const nlohmann::json& value) {
  std::vector<std::string> errors;
  schema_validate(schema, value, "$", errors);
  return errors;
}

}  // namespace testsupport
