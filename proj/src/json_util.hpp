#ifndef SETOPT_SRC_JSON_UTIL_HPP
#define SETOPT_SRC_JSON_UTIL_HPP

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "setopt/types.hpp"

namespace setopt::detail {

using nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& where, const std::string& msg) {
  throw ValidationError("schema: " + where + ": " + msg);
}

inline const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

inline double number(const json& v, const std::string& where) {
  if (!v.is_number()) schema_error(where, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) schema_error(where, "numbers must be finite");
  return d;
}

inline std::size_t count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) schema_error(where, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

inline std::string text(const json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where, "expected a string");
  return v.get<std::string>();
}

inline Vec vector(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array of numbers");
  Vec out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<Vec> matrix(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array of vectors");
  std::vector<Vec> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(vector(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace setopt::detail

#endif
