#include "tropper/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tropper::toml {

const Value& Value::at(const std::string& key) const {
  const Value* v = find(key);
  if (!v) throw std::out_of_range("missing key: " + key);
  return *v;
}

const Value* Value::find(const std::string& key) const {
  if (kind != Kind::Table) return nullptr;
  auto it = tab.find(key);
  return it == tab.end() ? nullptr : &it->second;
}

const std::string& Value::as_string() const {
  if (kind != Kind::String) throw std::invalid_argument("expected string");
  return raw;
}

long Value::as_int() const {
  if (kind != Kind::Number) throw std::invalid_argument("expected number");
  return std::stol(raw);
}

double Value::as_double() const {
  if (kind != Kind::Number) throw std::invalid_argument("expected number");
  return std::stod(raw);
}

Rational Value::as_rational() const {
  // Numbers parse exactly; strings allow "p/q".
  if (kind == Kind::Number || kind == Kind::String) return rational_from_string(raw);
  throw std::invalid_argument("expected number or rational string");
}

bool Value::as_bool() const {
  if (kind != Kind::Bool) throw std::invalid_argument("expected boolean");
  return flag;
}

const std::vector<Value>& Value::as_array() const {
  if (kind != Kind::Array) throw std::invalid_argument("expected array");
  return arr;
}

std::vector<long> Value::int_vector() const {
  std::vector<long> v;
  for (const auto& x : as_array()) v.push_back(x.as_int());
  return v;
}

std::vector<Rational> Value::rational_vector() const {
  std::vector<Rational> v;
  for (const auto& x : as_array()) v.push_back(x.as_rational());
  return v;
}

std::vector<std::vector<long>> Value::int_matrix() const {
  std::vector<std::vector<long>> m;
  for (const auto& row : as_array()) m.push_back(row.int_vector());
  return m;
}

namespace {

std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_dotted(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == '.') {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

// Parse a single value expression starting at pos.
Value parse_value(const std::string& s, size_t& pos) {
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip();
  if (pos >= s.size()) throw std::invalid_argument("expected value");
  Value v;
  char c = s[pos];
  if (c == '"') {
    ++pos;
    v.kind = Value::Kind::String;
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
      v.raw += s[pos++];
    }
    if (pos >= s.size()) throw std::invalid_argument("unterminated string");
    ++pos;
    return v;
  }
  if (c == '[') {
    ++pos;
    v.kind = Value::Kind::Array;
    skip();
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      return v;
    }
    for (;;) {
      v.arr.push_back(parse_value(s, pos));
      skip();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        skip();
        if (pos < s.size() && s[pos] == ']') { ++pos; return v; }  // trailing comma
        continue;
      }
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return v;
      }
      throw std::invalid_argument("expected ',' or ']' in array");
    }
  }
  if (s.compare(pos, 4, "true") == 0) {
    v.kind = Value::Kind::Bool;
    v.flag = true;
    pos += 4;
    return v;
  }
  if (s.compare(pos, 5, "false") == 0) {
    v.kind = Value::Kind::Bool;
    v.flag = false;
    pos += 5;
    return v;
  }
  // Number: sign, digits, optional . e + -
  size_t start = pos;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
                            s[pos] == '+' || s[pos] == '.' || s[pos] == 'e' || s[pos] == 'E' ||
                            s[pos] == '_'))
    ++pos;
  if (pos == start) throw std::invalid_argument("unrecognized value");
  v.kind = Value::Kind::Number;
  for (size_t i = start; i < pos; ++i)
    if (s[i] != '_') v.raw += s[i];
  return v;
}

}  // namespace

Value parse(const std::string& text) {
  Value root;
  root.kind = Value::Kind::Table;
  Value* current = &root;

  std::istringstream in(text);
  std::string line, pending;
  auto resolve = [&root](const std::vector<std::string>& parts, bool array_elem) -> Value* {
    Value* node = &root;
    for (size_t i = 0; i < parts.size(); ++i) {
      bool last = i + 1 == parts.size();
      Value& slot = node->tab[parts[i]];
      if (last && array_elem) {
        if (slot.kind == Value::Kind::None) slot.kind = Value::Kind::Array;
        if (slot.kind != Value::Kind::Array) throw std::invalid_argument("table/array clash");
        Value elem;
        elem.kind = Value::Kind::Table;
        slot.arr.push_back(elem);
        return &slot.arr.back();
      }
      if (slot.kind == Value::Kind::None) slot.kind = Value::Kind::Table;
      if (slot.kind == Value::Kind::Array) {
        if (slot.arr.empty()) throw std::invalid_argument("empty table array");
        node = &slot.arr.back();
      } else if (slot.kind == Value::Kind::Table) {
        node = &slot;
      } else {
        throw std::invalid_argument("key already holds a value: " + parts[i]);
      }
    }
    return node;
  };

  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (!pending.empty()) line = pending + " " + line;
    pending.clear();
    // Join lines while brackets are unbalanced (multi-line arrays).
    int depth = 0;
    bool in_str = false;
    for (char c : line) {
      if (c == '"') in_str = !in_str;
      if (in_str) continue;
      if (c == '[') ++depth;
      if (c == ']') --depth;
    }
    std::string l = trim(line);
    if (l.empty()) continue;
    bool header = l.front() == '[' && l.find('=') == std::string::npos;
    if (depth > 0 && !header) {
      pending = line;
      continue;
    }
    if (header) {
      bool array_elem = l.size() > 1 && l[1] == '[';
      size_t open = array_elem ? 2 : 1;
      size_t close = l.find(array_elem ? "]]" : "]", open);
      if (close == std::string::npos) throw std::invalid_argument("bad table header: " + l);
      current = resolve(split_dotted(l.substr(open, close - open)), array_elem);
      continue;
    }
    size_t eq = l.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key = value: " + l);
    std::string key = trim(l.substr(0, eq));
    size_t pos = 0;
    std::string rhs = trim(l.substr(eq + 1));
    Value v = parse_value(rhs, pos);
    while (pos < rhs.size() && std::isspace(static_cast<unsigned char>(rhs[pos]))) ++pos;
    if (pos != rhs.size()) throw std::invalid_argument("trailing input after value: " + l);
    current->tab[key] = std::move(v);
  }
  if (!pending.empty()) throw std::invalid_argument("unterminated array");
  return root;
}

Value parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

}  // namespace tropper::toml
