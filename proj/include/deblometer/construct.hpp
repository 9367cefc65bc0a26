// construct.hpp -- identity of one class, method, or field in the
// source-like naming used by ground truths. A ConstructRef is the matching
// key for all required/bloated accounting.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace deblometer {

enum class Level { Class, Method, Field };

inline const char* level_name(Level l) {
  switch (l) {
    case Level::Class: return "CLASS";
    case Level::Method: return "METHOD";
    case Level::Field: return "FIELD";
  }
  return "?";
}

/// One program construct. CLASS refs carry package + class name; METHOD refs
/// carry class name, member name, return type and parameter list; FIELD refs
/// carry class name + member name. Class names are simple names with '$'
/// nesting preserved ("Main$1"); member-level refs do not carry a package.
struct ConstructRef {
  Level level = Level::Class;
  std::string package;      // CLASS only; "" means the default package
  std::string class_name;   // simple name, '$' nesting preserved
  std::string member_name;  // METHOD / FIELD
  std::string return_type;  // METHOD, source-like ("void", "String[]")
  std::vector<std::string> params;  // METHOD, declaration order

  auto operator<=>(const ConstructRef&) const = default;

  static ConstructRef cls(std::string package, std::string name) {
    ConstructRef r;
    r.level = Level::Class;
    r.package = std::move(package);
    r.class_name = std::move(name);
    return r;
  }

  static ConstructRef method(std::string type, std::string name,
                             std::string return_type,
                             std::vector<std::string> params) {
    ConstructRef r;
    r.level = Level::Method;
    r.class_name = std::move(type);
    r.member_name = std::move(name);
    r.return_type = std::move(return_type);
    r.params = std::move(params);
    return r;
  }

  static ConstructRef field(std::string cls, std::string name) {
    ConstructRef r;
    r.level = Level::Field;
    r.class_name = std::move(cls);
    r.member_name = std::move(name);
    return r;
  }

  /// Comma-joined parameter list as it appears in ground-truth documents.
  std::string param_string() const {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ',';
      out += params[i];
    }
    return out;
  }

  std::string display() const {
    switch (level) {
      case Level::Class:
        return package.empty() ? class_name : package + "." + class_name;
      case Level::Method:
        return class_name + "." + member_name + "(" + param_string() + "):" +
               return_type;
      case Level::Field:
        return class_name + "." + member_name;
    }
    return "?";
  }
};

/// Splits a comma-joined ground-truth "param" value back into a list.
inline std::vector<std::string> split_param_string(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace deblometer
