// ground_truth.hpp -- the per-test-case ground truth model and its JSON
// wire format: three debloating levels, each split into "required" and
// "bloated" sections, keyed exactly as the benchmark's documents
// ("package"/"name" for classes, "type"/"name"/"return"/"param" for methods,
// "class"/"name" for fields). A level may instead carry {"absent": true},
// which distinguishes "not evaluated" from an empty 0/0 level.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "deblometer/construct.hpp"
#include "deblometer/inventory.hpp"

namespace deblometer {

enum class TruthErrorKind { SchemaViolation, OverlapViolation };

class TruthError : public std::runtime_error {
public:
  TruthError(TruthErrorKind kind, const std::string& what_arg)
      : std::runtime_error(what_arg), kind(kind) {}
  TruthErrorKind kind;
};

struct LevelTruth {
  bool absent = false;
  std::set<ConstructRef> required;
  std::set<ConstructRef> bloated;

  bool operator==(const LevelTruth&) const = default;

  std::set<ConstructRef> universe() const {
    std::set<ConstructRef> u = required;
    u.insert(bloated.begin(), bloated.end());
    return u;
  }
};

struct GroundTruth {
  LevelTruth classes;
  LevelTruth methods;
  LevelTruth fields;

  bool operator==(const GroundTruth&) const = default;

  const LevelTruth& at(Level level) const {
    switch (level) {
      case Level::Class: return classes;
      case Level::Method: return methods;
      case Level::Field: return fields;
    }
    return classes;
  }

  LevelTruth& at(Level level) {
    switch (level) {
      case Level::Class: return classes;
      case Level::Method: return methods;
      case Level::Field: return fields;
    }
    return classes;
  }
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline void require_keys(const ordered_json& obj,
                         std::initializer_list<const char*> keys,
                         const std::string& path) {
  for (const char* k : keys)
    if (!obj.contains(k))
      throw TruthError(TruthErrorKind::SchemaViolation,
                       path + ": missing key \"" + k + "\"");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known)
      throw TruthError(TruthErrorKind::SchemaViolation,
                       path + ": unknown key \"" + it.key() + "\"");
  }
}

inline std::string string_at(const ordered_json& obj, const char* key,
                             const std::string& path) {
  const auto& v = obj.at(key);
  if (!v.is_string())
    throw TruthError(TruthErrorKind::SchemaViolation,
                     path + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline ConstructRef entry_to_ref(Level level, const ordered_json& obj,
                                 const std::string& path) {
  if (!obj.is_object())
    throw TruthError(TruthErrorKind::SchemaViolation,
                     path + ": expected an object");
  switch (level) {
    case Level::Class:
      require_keys(obj, {"package", "name"}, path);
      return ConstructRef::cls(string_at(obj, "package", path),
                               string_at(obj, "name", path));
    case Level::Method:
      require_keys(obj, {"type", "name", "return", "param"}, path);
      return ConstructRef::method(
          string_at(obj, "type", path), string_at(obj, "name", path),
          string_at(obj, "return", path),
          split_param_string(string_at(obj, "param", path)));
    case Level::Field:
      require_keys(obj, {"class", "name"}, path);
      return ConstructRef::field(string_at(obj, "class", path),
                                 string_at(obj, "name", path));
  }
  throw TruthError(TruthErrorKind::SchemaViolation, path + ": bad level");
}

inline ordered_json ref_to_entry(const ConstructRef& ref) {
  ordered_json obj;
  switch (ref.level) {
    case Level::Class:
      obj["package"] = ref.package;
      obj["name"] = ref.class_name;
      break;
    case Level::Method:
      obj["type"] = ref.class_name;
      obj["name"] = ref.member_name;
      obj["return"] = ref.return_type;
      obj["param"] = ref.param_string();
      break;
    case Level::Field:
      obj["class"] = ref.class_name;
      obj["name"] = ref.member_name;
      break;
  }
  return obj;
}

inline LevelTruth parse_level(Level level, const ordered_json& obj,
                              const std::string& path) {
  if (!obj.is_object())
    throw TruthError(TruthErrorKind::SchemaViolation,
                     path + ": expected an object");
  LevelTruth out;
  if (obj.contains("absent")) {
    require_keys(obj, {"absent"}, path);
    if (!obj.at("absent").is_boolean() || !obj.at("absent").get<bool>())
      throw TruthError(TruthErrorKind::SchemaViolation,
                       path + ".absent: only the value true is meaningful");
    out.absent = true;
    return out;
  }
  require_keys(obj, {"required", "bloated"}, path);
  for (const char* section : {"required", "bloated"}) {
    const auto& arr = obj.at(section);
    if (!arr.is_array())
      throw TruthError(TruthErrorKind::SchemaViolation,
                       path + "." + section + ": expected an array");
    auto& target = std::string(section) == "required" ? out.required : out.bloated;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      ConstructRef ref = entry_to_ref(
          level, arr[i], path + "." + section + "[" + std::to_string(i) + "]");
      if (!target.insert(ref).second)
        throw TruthError(TruthErrorKind::SchemaViolation,
                         path + "." + section + ": duplicate entry " +
                             ref.display());
    }
  }
  for (const auto& ref : out.required)
    if (out.bloated.count(ref))
      throw TruthError(TruthErrorKind::OverlapViolation,
                       path + ": " + ref.display() +
                           " appears in both required and bloated");
  return out;
}

inline ordered_json level_to_json(const LevelTruth& level) {
  ordered_json obj;
  if (level.absent) {
    obj["absent"] = true;
    return obj;
  }
  obj["required"] = ordered_json::array();
  for (const auto& ref : level.required)
    obj["required"].push_back(ref_to_entry(ref));
  obj["bloated"] = ordered_json::array();
  for (const auto& ref : level.bloated)
    obj["bloated"].push_back(ref_to_entry(ref));
  return obj;
}

}  // namespace detail

inline GroundTruth parse_ground_truth(const std::string& text) {
  detail::ordered_json doc;
  try {
    doc = detail::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw TruthError(TruthErrorKind::SchemaViolation,
                     std::string("not well-formed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw TruthError(TruthErrorKind::SchemaViolation,
                     "top level: expected an object");
  detail::require_keys(doc, {"CLASS", "METHOD", "FIELD"}, "top level");
  GroundTruth gt;
  gt.classes = detail::parse_level(Level::Class, doc.at("CLASS"), "CLASS");
  gt.methods = detail::parse_level(Level::Method, doc.at("METHOD"), "METHOD");
  gt.fields = detail::parse_level(Level::Field, doc.at("FIELD"), "FIELD");
  return gt;
}

/// Canonical serialization: level keys in CLASS/METHOD/FIELD order, required
/// before bloated, entries sorted; parse(emit(gt)) == gt.
inline std::string emit_ground_truth(const GroundTruth& gt) {
  detail::ordered_json doc;
  doc["CLASS"] = detail::level_to_json(gt.classes);
  doc["METHOD"] = detail::level_to_json(gt.methods);
  doc["FIELD"] = detail::level_to_json(gt.fields);
  return doc.dump(1) + "\n";
}

/// Suite-level merge: unions the per-case sets and requires cross-case
/// disjointness of universes within one suite.
inline GroundTruth merge_ground_truths(const std::vector<GroundTruth>& cases) {
  GroundTruth merged;
  for (Level level : {Level::Class, Level::Method, Level::Field}) {
    bool any_present = false;
    for (const auto& gt : cases) any_present = any_present || !gt.at(level).absent;
    merged.at(level).absent = !any_present && !cases.empty();
  }
  for (const auto& gt : cases) {
    for (Level level : {Level::Class, Level::Method, Level::Field}) {
      const LevelTruth& src = gt.at(level);
      if (src.absent) continue;
      LevelTruth& dst = merged.at(level);
      for (const auto& ref : src.required) {
        if (dst.required.count(ref) || dst.bloated.count(ref))
          throw TruthError(TruthErrorKind::OverlapViolation,
                           "suite merge: " + ref.display() +
                               " appears in more than one test case");
        dst.required.insert(ref);
      }
      for (const auto& ref : src.bloated) {
        if (dst.required.count(ref) || dst.bloated.count(ref))
          throw TruthError(TruthErrorKind::OverlapViolation,
                           "suite merge: " + ref.display() +
                               " appears in more than one test case");
        dst.bloated.insert(ref);
      }
    }
  }
  return merged;
}

/// Ground-truth completeness gate: the unmodified bloated fixture's
/// inventory must equal required + bloated at every non-absent level.
struct CompletenessReport {
  struct LevelFindings {
    Level level = Level::Class;
    std::vector<ConstructRef> missing_in_fixture;  // in truth, not in inventory
    std::vector<ConstructRef> extra_in_fixture;    // in inventory, not in truth
    bool clean() const {
      return missing_in_fixture.empty() && extra_in_fixture.empty();
    }
  };
  std::vector<LevelFindings> levels;

  bool clean() const {
    for (const auto& l : levels)
      if (!l.clean()) return false;
    return true;
  }

  std::string summary() const {
    std::string out;
    for (const auto& l : levels) {
      for (const auto& r : l.missing_in_fixture)
        out += std::string(level_name(l.level)) + " missing in fixture: " +
               r.display() + "\n";
      for (const auto& r : l.extra_in_fixture)
        out += std::string(level_name(l.level)) + " extra in fixture: " +
               r.display() + "\n";
    }
    return out;
  }
};

inline CompletenessReport validate_against_fixture(const GroundTruth& gt,
                                                   const Inventory& inv) {
  CompletenessReport report;
  for (Level level : {Level::Class, Level::Method, Level::Field}) {
    const LevelTruth& truth = gt.at(level);
    if (truth.absent) continue;
    CompletenessReport::LevelFindings findings;
    findings.level = level;
    std::set<ConstructRef> universe = truth.universe();
    const std::set<ConstructRef>& present = inv.at(level);
    for (const auto& ref : universe)
      if (!present.count(ref)) findings.missing_in_fixture.push_back(ref);
    for (const auto& ref : present)
      if (!universe.count(ref)) findings.extra_in_fixture.push_back(ref);
    report.levels.push_back(std::move(findings));
  }
  return report;
}

/// Drops every ref declared by one of the given classes from the truth --
/// the alternate counting view when corrupted entries are excluded.
inline GroundTruth subtract_classes(const GroundTruth& gt,
                                    const std::set<ConstructRef>& classes) {
  std::set<std::string> simple_names;
  for (const auto& c : classes) simple_names.insert(c.class_name);
  GroundTruth out = gt;
  for (Level level : {Level::Class, Level::Method, Level::Field}) {
    LevelTruth& truth = out.at(level);
    if (truth.absent) continue;
    for (auto* section : {&truth.required, &truth.bloated}) {
      for (auto it = section->begin(); it != section->end();) {
        bool drop = level == Level::Class ? classes.count(*it) > 0
                                          : simple_names.count(it->class_name) > 0;
        it = drop ? section->erase(it) : ++it;
      }
    }
  }
  return out;
}

}  // namespace deblometer
