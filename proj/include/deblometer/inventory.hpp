// inventory.hpp -- extraction of the complete construct inventory (classes,
// methods, fields) of a JAR, the front half of the validation harness.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "deblometer/classfile.hpp"
#include "deblometer/construct.hpp"
#include "deblometer/jar.hpp"

namespace deblometer {

enum class InventoryPolicy { Strict, Lenient };

struct Diagnostic {
  std::string entry_path;
  std::string message;
  bool operator==(const Diagnostic&) const = default;
};

/// Raised in STRICT mode when a .class entry cannot be parsed; carries the
/// classmodel diagnosis.
class CorruptedClassEntry : public std::runtime_error {
public:
  CorruptedClassEntry(std::string path, const std::string& message)
      : std::runtime_error("corrupted class entry " + path + ": " + message),
        entry_path(std::move(path)) {}
  std::string entry_path;
};

struct Inventory {
  std::set<ConstructRef> classes;
  std::set<ConstructRef> methods;
  std::set<ConstructRef> fields;
  std::vector<Diagnostic> diagnostics;

  const std::set<ConstructRef>& at(Level level) const {
    switch (level) {
      case Level::Class: return classes;
      case Level::Method: return methods;
      case Level::Field: return fields;
    }
    return classes;
  }

  std::set<ConstructRef>& at(Level level) {
    switch (level) {
      case Level::Class: return classes;
      case Level::Method: return methods;
      case Level::Field: return fields;
    }
    return classes;
  }

  std::size_t total() const {
    return classes.size() + methods.size() + fields.size();
  }
};

struct InventoryOptions {
  // Constructors and static initializers stay out of ground-truth accounting
  // by default; flip to include them.
  bool include_initializers = false;
};

/// Collects one class ref per parseable ".class" entry plus refs for all its
/// declared members. STRICT fails on the first corrupted entry; LENIENT
/// records a diagnostic, excludes that entry's constructs, and continues.
inline Inventory extract_inventory(const JarArchive& jar,
                                   InventoryPolicy policy,
                                   const InventoryOptions& options = {}) {
  Inventory inv;
  for (const auto& [path, bytes] : jar.entries) {
    if (path.size() <= 6 || path.rfind(".class") != path.size() - 6) continue;
    ClassUnit unit;
    try {
      unit = parse_class(bytes);
    } catch (const ClassFileError& e) {
      if (policy == InventoryPolicy::Strict)
        throw CorruptedClassEntry(path, e.what());
      inv.diagnostics.push_back({path, e.what()});
      continue;
    }
    inv.classes.insert(class_ref_of(unit));
    for (const auto& m : unit.methods) {
      if (!options.include_initializers && m.is_initializer()) continue;
      inv.methods.insert(method_ref_of(unit, m));
    }
    for (const auto& f : unit.fields) inv.fields.insert(field_ref_of(unit, f));
  }
  return inv;
}

}  // namespace deblometer
