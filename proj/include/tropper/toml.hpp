// Minimal TOML reader covering the subset used by scene files: tables,
// arrays of tables (including dotted names), bare keys, strings, numbers,
// booleans and (nested) arrays.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "tropper/rational.hpp"

namespace tropper::toml {

struct Value {
  enum class Kind { None, String, Number, Bool, Array, Table };
  Kind kind = Kind::None;
  std::string raw;  // literal text for strings and numbers
  bool flag = false;
  std::vector<Value> arr;
  std::map<std::string, Value> tab;

  bool has(const std::string& key) const { return kind == Kind::Table && tab.count(key); }
  const Value& at(const std::string& key) const;
  const Value* find(const std::string& key) const;

  const std::string& as_string() const;
  long as_int() const;
  double as_double() const;
  Rational as_rational() const;
  bool as_bool() const;
  const std::vector<Value>& as_array() const;

  std::vector<long> int_vector() const;
  std::vector<Rational> rational_vector() const;
  std::vector<std::vector<long>> int_matrix() const;
};

Value parse(const std::string& text);
Value parse_file(const std::string& path);

}  // namespace tropper::toml
