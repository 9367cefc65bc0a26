// descriptor.hpp -- JVM binary descriptor grammar and its translation to the
// source-like type names used by ground truths ("V" -> "void",
// "[Ljava/lang/String;" -> "String[]", object types reduced to their simple
// class name with '$' nesting preserved).
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace deblometer {

class MalformedDescriptor : public std::runtime_error {
public:
  explicit MalformedDescriptor(const std::string& descriptor,
                               const std::string& reason)
      : std::runtime_error("malformed descriptor \"" + descriptor +
                           "\": " + reason) {}
};

namespace detail {

inline std::string base_type_name(char c) {
  switch (c) {
    case 'B': return "byte";
    case 'C': return "char";
    case 'D': return "double";
    case 'F': return "float";
    case 'I': return "int";
    case 'J': return "long";
    case 'S': return "short";
    case 'Z': return "boolean";
    case 'V': return "void";
    default: return {};
  }
}

// Parses one field-type production starting at pos; advances pos past it.
// allow_void admits the 'V' return pseudo-type.
inline std::string parse_type(const std::string& d, std::size_t& pos,
                              bool allow_void) {
  if (pos >= d.size()) throw MalformedDescriptor(d, "unexpected end");
  char c = d[pos];
  if (c == '[') {
    std::size_t dims = 0;
    while (pos < d.size() && d[pos] == '[') {
      ++dims;
      ++pos;
    }
    if (dims > 255) throw MalformedDescriptor(d, "more than 255 dimensions");
    std::string element = parse_type(d, pos, false);
    std::string out = element;
    for (std::size_t i = 0; i < dims; ++i) out += "[]";
    return out;
  }
  if (c == 'L') {
    std::size_t semi = d.find(';', pos);
    if (semi == std::string::npos)
      throw MalformedDescriptor(d, "unterminated object type");
    std::string binary = d.substr(pos + 1, semi - pos - 1);
    if (binary.empty()) throw MalformedDescriptor(d, "empty object type");
    pos = semi + 1;
    std::size_t slash = binary.rfind('/');
    return slash == std::string::npos ? binary : binary.substr(slash + 1);
  }
  std::string base = base_type_name(c);
  if (base.empty() || (c == 'V' && !allow_void))
    throw MalformedDescriptor(d, std::string("unexpected type tag '") + c +
                                     "' at offset " + std::to_string(pos));
  ++pos;
  return base;
}

}  // namespace detail

/// Source-like name of a binary field descriptor.
inline std::string field_type_name(const std::string& descriptor) {
  std::size_t pos = 0;
  std::string name = detail::parse_type(descriptor, pos, false);
  if (pos != descriptor.size())
    throw MalformedDescriptor(descriptor, "trailing characters");
  return name;
}

struct MethodTypeNames {
  std::string return_type;
  std::vector<std::string> params;
};

/// Source-like names of a binary method descriptor "(...)R".
inline MethodTypeNames method_type_names(const std::string& descriptor) {
  if (descriptor.empty() || descriptor.front() != '(')
    throw MalformedDescriptor(descriptor, "missing '('");
  MethodTypeNames out;
  std::size_t pos = 1;
  while (pos < descriptor.size() && descriptor[pos] != ')')
    out.params.push_back(detail::parse_type(descriptor, pos, false));
  if (pos >= descriptor.size())
    throw MalformedDescriptor(descriptor, "missing ')'");
  ++pos;  // ')'
  out.return_type = detail::parse_type(descriptor, pos, true);
  if (pos != descriptor.size())
    throw MalformedDescriptor(descriptor, "trailing characters");
  return out;
}

/// Number of argument slots a method descriptor occupies (long/double take
/// two); used for the invokeinterface count operand.
inline unsigned argument_slot_count(const std::string& descriptor) {
  if (descriptor.empty() || descriptor.front() != '(')
    throw MalformedDescriptor(descriptor, "missing '('");
  unsigned slots = 0;
  std::size_t pos = 1;
  while (pos < descriptor.size() && descriptor[pos] != ')') {
    char c = descriptor[pos];
    slots += (c == 'J' || c == 'D') ? 2 : 1;
    detail::parse_type(descriptor, pos, false);
  }
  if (pos >= descriptor.size())
    throw MalformedDescriptor(descriptor, "missing ')'");
  return slots;
}

/// Splits a binary class name "pkg/sub/Outer$Inner" into its package
/// ("pkg.sub", "" for the default package) and simple name ("Outer$Inner").
struct BinaryClassName {
  std::string package;
  std::string simple_name;
};

inline BinaryClassName split_binary_name(const std::string& binary) {
  BinaryClassName out;
  std::size_t slash = binary.rfind('/');
  if (slash == std::string::npos) {
    out.simple_name = binary;
  } else {
    out.package = binary.substr(0, slash);
    for (auto& c : out.package)
      if (c == '/') c = '.';
    out.simple_name = binary.substr(slash + 1);
  }
  return out;
}

}  // namespace deblometer
