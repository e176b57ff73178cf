#pragma once

// Small checked accessors over nlohmann::json shared by the document loaders.

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "bcint/error.hpp"

namespace bcint::detail {

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points at the offending character.
    const auto pos = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::kParse, "line " + std::to_string(pos.line) + ", column " +
                                       std::to_string(pos.column) + ": malformed document");
  }
}

inline const nlohmann::json& member(const nlohmann::json& obj, const char* key) {
  static const nlohmann::json kNull;
  auto it = obj.find(key);
  return it == obj.end() ? kNull : *it;
}

inline const nlohmann::json& expect_object(const nlohmann::json& j, const std::string& path) {
  if (!j.is_object()) throw Error(ErrorCode::kValidation, path + ": expected an object");
  return j;
}

inline const nlohmann::json& expect_array(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw Error(ErrorCode::kValidation, path + ": expected an array");
  return j;
}

inline std::string expect_string(const nlohmann::json& j, const std::string& path) {
  if (!j.is_string()) throw Error(ErrorCode::kValidation, path + ": expected a string");
  return j.get<std::string>();
}

inline std::string required_string(const nlohmann::json& obj, const char* key,
                                   const std::string& path) {
  const auto& v = member(obj, key);
  if (v.is_null()) {
    throw Error(ErrorCode::kValidation, path + ": missing required key '" + key + "'");
  }
  return expect_string(v, path + "." + key);
}

inline std::optional<std::string> optional_string(const nlohmann::json& obj, const char* key,
                                                  const std::string& path) {
  const auto& v = member(obj, key);
  if (v.is_null()) return std::nullopt;
  return expect_string(v, path + "." + key);
}

}  // namespace bcint::detail
