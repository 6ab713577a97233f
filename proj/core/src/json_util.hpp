#pragma once

// Internal helpers for the strict JSON document readers.

#include <cmath>
#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gdep/error.hpp"
#include "gdep/geometry.hpp"

namespace gdep::detail {

using nlohmann::json;

inline json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::E_PARSE, what + ": " + e.what());
  }
}

inline void require_object(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw Error(ErrorCode::E_PARSE, ctx + ": expected an object");
}

inline void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed, const std::string& ctx) {
  require_object(j, ctx);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (std::string_view a : allowed) known = known || it.key() == a;
    if (!known) throw Error(ErrorCode::E_PARSE, ctx + ": unknown field '" + it.key() + "'");
  }
}

inline const json& field(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::E_PARSE, ctx + ": missing field '" + key + "'");
  return *it;
}

inline std::string get_string(const json& j, const char* key, const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_string()) throw Error(ErrorCode::E_PARSE, ctx + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

inline double as_number(const json& v, const std::string& ctx) {
  if (!v.is_number()) throw Error(ErrorCode::E_PARSE, ctx + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(ErrorCode::E_PARSE, ctx + ": number must be finite");
  return d;
}

inline double get_number(const json& j, const char* key, const std::string& ctx) {
  return as_number(field(j, key, ctx), ctx + "." + key);
}

inline Vec3 as_vec3(const json& v, const std::string& ctx) {
  if (!v.is_array() || v.size() != 3) throw Error(ErrorCode::E_PARSE, ctx + ": expected an array of 3 numbers");
  return {as_number(v[0], ctx), as_number(v[1], ctx), as_number(v[2], ctx)};
}

inline Vec3 get_vec3(const json& j, const char* key, const std::string& ctx) {
  return as_vec3(field(j, key, ctx), ctx + "." + key);
}

inline json vec3_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

inline Quat as_quat(const json& v, const std::string& ctx) {
  if (!v.is_array() || v.size() != 4) throw Error(ErrorCode::E_PARSE, ctx + ": expected an array of 4 numbers");
  return {as_number(v[0], ctx), as_number(v[1], ctx), as_number(v[2], ctx), as_number(v[3], ctx)};
}

inline Axis as_axis(const json& v, const std::string& ctx) {
  if (v == "x") return Axis::X;
  if (v == "y") return Axis::Y;
  if (v == "z") return Axis::Z;
  throw Error(ErrorCode::E_PARSE, ctx + ": axis must be \"x\", \"y\" or \"z\"");
}

}  // namespace gdep::detail
