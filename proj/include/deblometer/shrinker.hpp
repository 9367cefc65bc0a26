// shrinker.hpp -- the reference debloater: class-hierarchy reachability from
// entry points over a worklist, then removal of unreached classes, methods
// and fields. CONSERVATIVE mode additionally keeps annotation types
// referenced by retained members, serialization lifecycle methods of live
// serializable classes, no-argument constructors of live instantiable
// classes, and invokedynamic implementation methods; AGGRESSIVE keeps none
// of those. Output always re-parses cleanly -- the constant pool is rebuilt
// from the structural model, so no dangling indices can survive.
#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "deblometer/classfile.hpp"
#include "deblometer/construct.hpp"
#include "deblometer/ground_truth.hpp"
#include "deblometer/jar.hpp"

namespace deblometer {

enum class ShrinkErrorKind {
  MissingEntryPoint,
  UnresolvedSuperclass,
  InvariantViolation,
  ConfigError,
};

class ShrinkError : public std::runtime_error {
public:
  ShrinkError(ShrinkErrorKind kind, const std::string& what_arg)
      : std::runtime_error(what_arg), kind(kind) {}
  ShrinkErrorKind kind;
};

enum class ShrinkMode { Conservative, Aggressive };

struct ShrinkPolicy {
  ShrinkMode mode = ShrinkMode::Conservative;
  std::set<Level> levels = {Level::Class, Level::Method, Level::Field};
  std::vector<ConstructRef> reflection_seeds;
  bool keep_annotations = true;
  bool keep_serialization_members = true;

  static ShrinkPolicy conservative() { return ShrinkPolicy{}; }

  static ShrinkPolicy aggressive() {
    ShrinkPolicy p;
    p.mode = ShrinkMode::Aggressive;
    p.keep_annotations = false;
    p.keep_serialization_members = false;
    return p;
  }

  static ShrinkPolicy no_op() {
    ShrinkPolicy p;
    p.levels.clear();
    return p;
  }

  void validate() const {
    if (mode == ShrinkMode::Conservative &&
        (!keep_annotations || !keep_serialization_members))
      throw ShrinkError(ShrinkErrorKind::ConfigError,
                        "conservative mode implies keep_annotations and "
                        "keep_serialization_members");
  }
};

enum class EdgeReason {
  DirectCall,
  VirtualDispatch,
  InterfaceDispatch,
  FieldAccess,
  NewInstance,
  ClassRef,
  IndyBootstrap,
  PolicyKeep,
  Seed,
};

inline const char* edge_reason_name(EdgeReason r) {
  switch (r) {
    case EdgeReason::DirectCall: return "DIRECT_CALL";
    case EdgeReason::VirtualDispatch: return "VIRTUAL_DISPATCH";
    case EdgeReason::InterfaceDispatch: return "INTERFACE_DISPATCH";
    case EdgeReason::FieldAccess: return "FIELD_ACCESS";
    case EdgeReason::NewInstance: return "NEW_INSTANCE";
    case EdgeReason::ClassRef: return "CLASS_REF";
    case EdgeReason::IndyBootstrap: return "INDY_BOOTSTRAP";
    case EdgeReason::PolicyKeep: return "POLICY_KEEP";
    case EdgeReason::Seed: return "SEED";
  }
  return "?";
}

struct Edge {
  std::optional<ConstructRef> from;  // reaching method; empty for roots
  ConstructRef to;
  EdgeReason reason = EdgeReason::Seed;
};

struct ReachabilitySet {
  std::set<ConstructRef> live_classes;
  std::set<ConstructRef> live_methods;
  std::set<ConstructRef> live_fields;
  std::vector<Edge> edges;

  // Binary-accurate views the debloat transform operates on.
  std::set<std::string> class_keys;                   // binary names
  std::set<std::array<std::string, 3>> method_keys;   // owner, name, descriptor
  std::set<std::array<std::string, 3>> field_keys;    // owner, name, descriptor

  bool has_class(const std::string& binary) const {
    return class_keys.count(binary) > 0;
  }
  bool has_method(const std::string& owner, const std::string& name,
                  const std::string& desc) const {
    return method_keys.count({owner, name, desc}) > 0;
  }
  bool has_field(const std::string& owner, const std::string& name,
                 const std::string& desc) const {
    return field_keys.count({owner, name, desc}) > 0;
  }
};

namespace detail {

inline bool is_platform_class(const std::string& binary) {
  for (const char* prefix : {"java/", "javax/", "jdk/", "sun/", "com/sun/"})
    if (binary.rfind(prefix, 0) == 0) return true;
  return false;
}

inline std::optional<std::string> annotation_descriptor_to_binary(
    const std::string& descriptor) {
  if (descriptor.size() < 3 || descriptor.front() != 'L' ||
      descriptor.back() != ';')
    return std::nullopt;
  return descriptor.substr(1, descriptor.size() - 2);
}

struct SerializationLifecycle {
  const char* name;
  const char* descriptor;
};

inline constexpr std::array<SerializationLifecycle, 7> kLifecycleMethods{{
    {"readObject", "(Ljava/io/ObjectInputStream;)V"},
    {"writeObject", "(Ljava/io/ObjectOutputStream;)V"},
    {"readObjectNoData", "()V"},
    {"readResolve", "()Ljava/lang/Object;"},
    {"writeReplace", "()Ljava/lang/Object;"},
    {"readExternal", "(Ljava/io/ObjectInput;)V"},
    {"writeExternal", "(Ljava/io/ObjectOutput;)V"},
}};

/// Parsed view over every class entry of the input JARs.
class ClassIndex {
public:
  explicit ClassIndex(const std::vector<const JarArchive*>& jars) {
    for (const JarArchive* jar : jars) {
      for (const auto& [path, bytes] : jar->entries) {
        if (path.size() <= 6 || path.rfind(".class") != path.size() - 6)
          continue;
        ClassUnit unit = parse_class(bytes);
        std::string name = unit.binary_name;
        units_.emplace(std::move(name), std::move(unit));
      }
    }
    for (const auto& [name, unit] : units_) {
      auto split = split_binary_name(name);
      by_simple_name_[split.simple_name].push_back(name);
      by_class_ref_[{split.package, split.simple_name}] = name;
    }
  }

  const ClassUnit* find(const std::string& binary) const {
    auto it = units_.find(binary);
    return it == units_.end() ? nullptr : &it->second;
  }

  const std::map<std::string, ClassUnit>& units() const { return units_; }

  std::optional<std::string> binary_of_class_ref(const ConstructRef& ref) const {
    auto it = by_class_ref_.find({ref.package, ref.class_name});
    if (it == by_class_ref_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<std::string>* binaries_of_simple_name(
      const std::string& simple) const {
    auto it = by_simple_name_.find(simple);
    return it == by_simple_name_.end() ? nullptr : &it->second;
  }

  /// True when `sub` equals `base` or inherits from it through classes or
  /// interfaces known to the index.
  bool subtype_or_equal(const std::string& sub, const std::string& base) const {
    if (sub == base) return true;
    const ClassUnit* unit = find(sub);
    if (!unit) return false;
    if (unit->super_name && subtype_or_equal(*unit->super_name, base))
      return true;
    for (const auto& ifc : unit->interfaces)
      if (subtype_or_equal(ifc, base)) return true;
    return false;
  }

  bool implements_serializable(const std::string& binary) const {
    const ClassUnit* unit = find(binary);
    if (!unit) {
      return binary == "java/io/Serializable" ||
             binary == "java/io/Externalizable";
    }
    if (unit->super_name && implements_serializable(*unit->super_name))
      return true;
    for (const auto& ifc : unit->interfaces)
      if (implements_serializable(ifc)) return true;
    return false;
  }

private:
  std::map<std::string, ClassUnit> units_;
  std::map<std::string, std::vector<std::string>> by_simple_name_;
  std::map<std::pair<std::string, std::string>, std::string> by_class_ref_;
};

}  // namespace detail

namespace detail {

class ReachabilityEngine {
public:
  ReachabilityEngine(const ClassIndex& index, const ShrinkPolicy& policy)
      : index_(index), policy_(policy) {}

  ReachabilitySet run(const std::vector<ConstructRef>& entries) {
    for (const auto& entry : entries) seed(entry, EdgeReason::Seed);
    for (const auto& seed_ref : policy_.reflection_seeds)
      seed(seed_ref, EdgeReason::Seed);
    drain();
    return std::move(result_);
  }

private:
  using MethodKey = std::array<std::string, 3>;

  void seed(const ConstructRef& ref, EdgeReason reason) {
    switch (ref.level) {
      case Level::Class: {
        auto binary = index_.binary_of_class_ref(ref);
        if (!binary)
          throw ShrinkError(ShrinkErrorKind::MissingEntryPoint,
                            "entry/seed class not found in inputs: " +
                                ref.display());
        make_class_live(*binary, reason, std::nullopt);
        // The declared entry point: a main method, when present.
        if (const ClassUnit* unit = index_.find(*binary))
          for (const auto& m : unit->methods)
            if (m.name == "main" && m.descriptor == "([Ljava/lang/String;)V")
              make_method_live(*binary, m.name, m.descriptor, reason,
                               std::nullopt);
        break;
      }
      case Level::Method:
      case Level::Field: {
        const auto* candidates = index_.binaries_of_simple_name(ref.class_name);
        if (!candidates)
          throw ShrinkError(ShrinkErrorKind::MissingEntryPoint,
                            "entry/seed class not found in inputs: " +
                                ref.display());
        bool matched = false;
        for (const auto& binary : *candidates) {
          const ClassUnit* unit = index_.find(binary);
          if (ref.level == Level::Method) {
            for (const auto& m : unit->methods)
              if (method_ref_of(*unit, m) == ref) {
                make_method_live(binary, m.name, m.descriptor, reason,
                                 std::nullopt);
                matched = true;
              }
          } else {
            for (const auto& f : unit->fields)
              if (field_ref_of(*unit, f) == ref) {
                make_field_live(binary, f.name, f.descriptor, reason,
                                std::nullopt);
                matched = true;
              }
          }
        }
        if (!matched)
          throw ShrinkError(ShrinkErrorKind::MissingEntryPoint,
                            "entry/seed member not found in inputs: " +
                                ref.display());
        break;
      }
    }
  }

  void drain() {
    while (!worklist_.empty()) {
      MethodKey key = worklist_.front();
      worklist_.pop_front();
      scan_method(key);
    }
  }

  void make_class_live(const std::string& binary, EdgeReason reason,
                       const std::optional<ConstructRef>& from) {
    const ClassUnit* unit = index_.find(binary);
    if (!unit) return;  // platform or absent: boundary
    if (!result_.class_keys.insert(binary).second) return;
    ConstructRef ref = class_ref_of(*unit);
    result_.live_classes.insert(ref);
    result_.edges.push_back({from, ref, reason});

    // Loading a class loads its supertypes.
    if (unit->super_name) {
      if (!index_.find(*unit->super_name) &&
          !is_platform_class(*unit->super_name))
        throw ShrinkError(ShrinkErrorKind::UnresolvedSuperclass,
                          binary + " extends " + *unit->super_name +
                              ", which is neither an input class nor a "
                              "platform class");
      make_class_live(*unit->super_name, EdgeReason::ClassRef, from);
    }
    for (const auto& ifc : unit->interfaces) {
      if (!index_.find(ifc) && !is_platform_class(ifc))
        throw ShrinkError(ShrinkErrorKind::UnresolvedSuperclass,
                          binary + " implements " + ifc +
                              ", which is neither an input class nor a "
                              "platform class");
      make_class_live(ifc, EdgeReason::ClassRef, from);
    }

    // Class initializer runs on first use.
    for (const auto& m : unit->methods)
      if (m.name == "<clinit>")
        make_method_live(binary, m.name, m.descriptor, EdgeReason::DirectCall,
                         from);

    if (policy_.mode == ShrinkMode::Conservative && !unit->is_interface() &&
        !unit->is_abstract()) {
      for (const auto& m : unit->methods)
        if (m.name == "<init>" && m.descriptor == "()V")
          make_method_live(binary, m.name, m.descriptor,
                           EdgeReason::PolicyKeep, from);
    }

    if (policy_.keep_serialization_members &&
        index_.implements_serializable(binary)) {
      for (const auto& lifecycle : kLifecycleMethods)
        for (const auto& m : unit->methods)
          if (m.name == lifecycle.name && m.descriptor == lifecycle.descriptor)
            make_method_live(binary, m.name, m.descriptor,
                             EdgeReason::PolicyKeep, from);
    }

    if (policy_.keep_annotations)
      if (const auto* anns = unit->annotations())
        keep_annotation_types(*anns, ref);

    // Revisit recorded virtual call sites: this class may introduce targets.
    for (const auto& site : virtual_sites_)
      dispatch_to_class(binary, site);
  }

  void make_method_live(const std::string& owner, const std::string& name,
                        const std::string& descriptor, EdgeReason reason,
                        const std::optional<ConstructRef>& from) {
    const ClassUnit* unit = index_.find(owner);
    if (!unit) return;
    const MethodMember* member = nullptr;
    for (const auto& m : unit->methods)
      if (m.name == name && m.descriptor == descriptor) member = &m;
    if (!member) {
      // Resolution walks up for inherited statics/specials.
      if (unit->super_name)
        make_method_live(*unit->super_name, name, descriptor, reason, from);
      return;
    }
    if (!result_.method_keys.insert({owner, name, descriptor}).second) return;
    ConstructRef ref = method_ref_of(*unit, *member);
    result_.live_methods.insert(ref);
    result_.edges.push_back({from, ref, reason});
    make_class_live(owner, EdgeReason::ClassRef, from);
    if (policy_.keep_annotations)
      for (const auto& attr : member->attributes)
        if (const auto* anns = std::get_if<AnnotationsAttr>(&attr.value))
          keep_annotation_types(*anns, ref);
    worklist_.push_back({owner, name, descriptor});
  }

  void make_field_live(const std::string& owner, const std::string& name,
                       const std::string& descriptor, EdgeReason reason,
                       const std::optional<ConstructRef>& from) {
    const ClassUnit* unit = index_.find(owner);
    if (!unit) return;
    const FieldMember* member = nullptr;
    for (const auto& f : unit->fields)
      if (f.name == name && f.descriptor == descriptor) member = &f;
    if (!member) {
      if (unit->super_name)
        make_field_live(*unit->super_name, name, descriptor, reason, from);
      return;
    }
    if (!result_.field_keys.insert({owner, name, descriptor}).second) return;
    ConstructRef ref = field_ref_of(*unit, *member);
    result_.live_fields.insert(ref);
    result_.edges.push_back({from, ref, reason});
    make_class_live(owner, EdgeReason::ClassRef, from);
    if (policy_.keep_annotations)
      for (const auto& attr : member->attributes)
        if (const auto* anns = std::get_if<AnnotationsAttr>(&attr.value))
          keep_annotation_types(*anns, ref);
  }

  void keep_annotation_types(const AnnotationsAttr& anns,
                             const ConstructRef& from) {
    for (const auto& a : anns.annotations) {
      auto binary = annotation_descriptor_to_binary(a.type_descriptor);
      if (!binary || !index_.find(*binary)) continue;
      make_class_live(*binary, EdgeReason::PolicyKeep, from);
      // An annotation type without its members is unusable at runtime.
      const ClassUnit* annotation = index_.find(*binary);
      for (const auto& m : annotation->methods)
        make_method_live(*binary, m.name, m.descriptor, EdgeReason::PolicyKeep,
                         from);
    }
  }

  struct VirtualSite {
    std::string owner, name, descriptor;
    bool interface_call = false;
    ConstructRef from;
    auto operator<=>(const VirtualSite&) const = default;
  };

  // Resolves (name, descriptor) from `start` upward to the first concrete
  // declaration; abstract declarations terminate without a target.
  void resolve_concrete_up(const std::string& start, const VirtualSite& site) {
    const ClassUnit* unit = index_.find(start);
    while (unit) {
      for (const auto& m : unit->methods) {
        if (m.name != site.name || m.descriptor != site.descriptor) continue;
        if (m.is_abstract()) return;
        make_method_live(unit->binary_name, m.name, m.descriptor,
                         site.interface_call ? EdgeReason::InterfaceDispatch
                                             : EdgeReason::VirtualDispatch,
                         site.from);
        return;
      }
      unit = unit->super_name ? index_.find(*unit->super_name) : nullptr;
    }
  }

  void dispatch_to_class(const std::string& live_class,
                         const VirtualSite& site) {
    if (!index_.subtype_or_equal(live_class, site.owner)) return;
    resolve_concrete_up(live_class, site);
  }

  void record_virtual_site(VirtualSite site) {
    if (!virtual_sites_.insert(site).second) return;
    make_class_live(site.owner, EdgeReason::ClassRef, site.from);
    // Existing live classes may already provide targets.
    std::vector<std::string> live_now(result_.class_keys.begin(),
                                      result_.class_keys.end());
    for (const auto& cls : live_now) dispatch_to_class(cls, site);
  }

  void scan_method(const MethodKey& key) {
    const ClassUnit* unit = index_.find(key[0]);
    if (!unit) return;
    const MethodMember* member = nullptr;
    for (const auto& m : unit->methods)
      if (m.name == key[1] && m.descriptor == key[2]) member = &m;
    if (!member) return;
    ConstructRef from = method_ref_of(*unit, *member);

    for (const auto& attr : member->attributes) {
      if (const auto* ex = std::get_if<ExceptionsAttr>(&attr.value))
        for (const auto& t : ex->exception_types)
          make_class_live(t, EdgeReason::ClassRef, from);
    }

    const CodeAttr* code = member->code();
    if (!code) return;
    for (const auto& handler : code->handlers)
      if (handler.catch_type)
        make_class_live(*handler.catch_type, EdgeReason::ClassRef, from);

    for (const auto& inst : code->instructions) {
      if (const auto* call = std::get_if<MethodRefOp>(&inst.operand)) {
        if (inst.opcode == op::invokestatic ||
            inst.opcode == op::invokespecial) {
          make_method_live(call->owner, call->name, call->descriptor,
                           EdgeReason::DirectCall, from);
          make_class_live(call->owner, EdgeReason::ClassRef, from);
        } else {
          record_virtual_site({call->owner, call->name, call->descriptor,
                               inst.opcode == op::invokeinterface, from});
        }
      } else if (const auto* field = std::get_if<FieldRefOp>(&inst.operand)) {
        make_field_live(field->owner, field->name, field->descriptor,
                        EdgeReason::FieldAccess, from);
        make_class_live(field->owner, EdgeReason::ClassRef, from);
      } else if (const auto* type = std::get_if<TypeRefOp>(&inst.operand)) {
        make_class_live(type->binary_name,
                        inst.opcode == op::new_ ? EdgeReason::NewInstance
                                                : EdgeReason::ClassRef,
                        from);
      } else if (const auto* arr = std::get_if<MultiArrayOp>(&inst.operand)) {
        make_class_live(arr->binary_name, EdgeReason::ClassRef, from);
      } else if (const auto* load = std::get_if<LoadConstOp>(&inst.operand)) {
        if (const auto* cls = std::get_if<ClassConst>(&load->value))
          make_class_live(cls->binary_name, EdgeReason::ClassRef, from);
        if (const auto* mh = std::get_if<MethodHandleConst>(&load->value))
          make_method_live(mh->ref.owner, mh->ref.name, mh->ref.descriptor,
                           EdgeReason::DirectCall, from);
      } else if (const auto* indy =
                     std::get_if<InvokeDynamicOp>(&inst.operand)) {
        // The instantiated type must exist at link time.
        std::size_t close = indy->descriptor.rfind(')');
        std::string ret = indy->descriptor.substr(close + 1);
        if (auto binary = annotation_descriptor_to_binary(ret))
          make_class_live(*binary, EdgeReason::ClassRef, from);
        if (policy_.mode == ShrinkMode::Conservative) {
          const auto* bsm = unit->bootstrap_methods();
          if (bsm && indy->bootstrap_index < bsm->methods.size()) {
            const BootstrapMethod& entry = bsm->methods[indy->bootstrap_index];
            for (const auto& arg : entry.arguments)
              if (const auto* mh = std::get_if<MethodHandleConst>(&arg))
                make_method_live(mh->ref.owner, mh->ref.name,
                                 mh->ref.descriptor, EdgeReason::IndyBootstrap,
                                 from);
          }
        }
      }
    }
  }

  const ClassIndex& index_;
  const ShrinkPolicy& policy_;
  ReachabilitySet result_;
  std::deque<MethodKey> worklist_;
  std::set<VirtualSite> virtual_sites_;
};

}  // namespace detail

/// Fixed point of the reachability worklist over the input JARs.
inline ReachabilitySet compute_reachable(const std::vector<const JarArchive*>& jars,
                                         const std::vector<ConstructRef>& entries,
                                         const ShrinkPolicy& policy) {
  policy.validate();
  detail::ClassIndex index(jars);
  detail::ReachabilityEngine engine(index, policy);
  return engine.run(entries);
}

inline ReachabilitySet compute_reachable(const JarArchive& jar,
                                         const std::vector<ConstructRef>& entries,
                                         const ShrinkPolicy& policy) {
  return compute_reachable(std::vector<const JarArchive*>{&jar}, entries,
                           policy);
}

/// Oracle reachability: live = exactly the ground truth's required sets
/// (plus hull classes of required members and their initializers).
inline ReachabilitySet reachability_from_truth(const JarArchive& jar,
                                               const GroundTruth& truth) {
  detail::ClassIndex index({&jar});
  ReachabilitySet live;
  auto add_class = [&](const std::string& binary) {
    if (const ClassUnit* unit = index.find(binary)) {
      if (live.class_keys.insert(binary).second) {
        ConstructRef ref = class_ref_of(*unit);
        live.live_classes.insert(ref);
        live.edges.push_back({std::nullopt, ref, EdgeReason::Seed});
        for (const auto& m : unit->methods)
          if (m.is_initializer())
            live.method_keys.insert({binary, m.name, m.descriptor});
      }
    }
  };
  for (const auto& [binary, unit] : index.units()) {
    ConstructRef cls = class_ref_of(unit);
    if (!truth.classes.absent && truth.classes.required.count(cls))
      add_class(binary);
    for (const auto& m : unit.methods) {
      if (m.is_initializer()) continue;
      if (!truth.methods.absent &&
          truth.methods.required.count(method_ref_of(unit, m))) {
        add_class(binary);
        live.method_keys.insert({binary, m.name, m.descriptor});
        live.live_methods.insert(method_ref_of(unit, m));
      }
    }
    for (const auto& f : unit.fields) {
      if (!truth.fields.absent &&
          truth.fields.required.count(field_ref_of(unit, f))) {
        add_class(binary);
        live.field_keys.insert({binary, f.name, f.descriptor});
        live.live_fields.insert(field_ref_of(unit, f));
      }
    }
  }
  return live;
}

/// Removes constructs outside the live set, per enabled level. The emitted
/// classes are rebuilt from the structural model (pool compaction and
/// reference rewriting are inherent) and re-parsed as a self-check.
inline JarArchive apply_debloat(const JarArchive& jar,
                                const ReachabilitySet& live,
                                const ShrinkPolicy& policy) {
  policy.validate();
  JarArchive out;
  out.manifest = jar.manifest;
  bool class_level = policy.levels.count(Level::Class) > 0;
  bool method_level = policy.levels.count(Level::Method) > 0;
  bool field_level = policy.levels.count(Level::Field) > 0;

  for (const auto& [path, bytes] : jar.entries) {
    if (path.size() <= 6 || path.rfind(".class") != path.size() - 6) {
      out.add(path, bytes);
      continue;
    }
    ClassUnit unit = parse_class(bytes);
    if (class_level && !live.has_class(unit.binary_name)) continue;
    if (method_level) {
      std::vector<MethodMember> kept;
      for (auto& m : unit.methods)
        if (live.has_method(unit.binary_name, m.name, m.descriptor))
          kept.push_back(std::move(m));
      unit.methods = std::move(kept);
    }
    if (field_level) {
      std::vector<FieldMember> kept;
      for (auto& f : unit.fields)
        if (live.has_field(unit.binary_name, f.name, f.descriptor))
          kept.push_back(std::move(f));
      unit.fields = std::move(kept);
    }
    if (!policy.keep_annotations && !policy.levels.empty()) {
      auto strip = [](std::vector<AttributeRecord>& attrs) {
        std::erase_if(attrs, [](const AttributeRecord& a) {
          return std::holds_alternative<AnnotationsAttr>(a.value);
        });
      };
      strip(unit.attributes);
      for (auto& m : unit.methods) strip(m.attributes);
      for (auto& f : unit.fields) strip(f.attributes);
    }
    Bytes emitted = emit_class(unit);
    try {
      parse_class(emitted);
    } catch (const ClassFileError& e) {
      throw ShrinkError(ShrinkErrorKind::InvariantViolation,
                        "debloated output for " + path +
                            " failed the parse-back self-check: " + e.what());
    }
    out.add(path, std::move(emitted));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Policy and seeds files (JSON). Seed refs mirror the ground-truth entry
// syntax, grouped in "classes" / "methods" / "fields" sections.

inline std::vector<ConstructRef> parse_seed_sections(
    const nlohmann::ordered_json& doc, const std::string& path) {
  if (!doc.is_object())
    throw ShrinkError(ShrinkErrorKind::ConfigError,
                      path + ": expected an object");
  std::vector<ConstructRef> seeds;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    Level level;
    if (it.key() == "classes") level = Level::Class;
    else if (it.key() == "methods") level = Level::Method;
    else if (it.key() == "fields") level = Level::Field;
    else
      throw ShrinkError(ShrinkErrorKind::ConfigError,
                        path + ": unknown key \"" + it.key() + "\"");
    if (!it.value().is_array())
      throw ShrinkError(ShrinkErrorKind::ConfigError,
                        path + "." + it.key() + ": expected an array");
    for (std::size_t i = 0; i < it.value().size(); ++i) {
      try {
        seeds.push_back(detail::entry_to_ref(
            level, it.value()[i],
            path + "." + it.key() + "[" + std::to_string(i) + "]"));
      } catch (const TruthError& e) {
        throw ShrinkError(ShrinkErrorKind::ConfigError, e.what());
      }
    }
  }
  return seeds;
}

inline std::vector<ConstructRef> parse_seeds_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ShrinkError(ShrinkErrorKind::ConfigError,
                      std::string("seeds file is not well-formed JSON: ") +
                          e.what());
  }
  return parse_seed_sections(doc, "seeds");
}

inline std::string emit_seeds_json(const std::vector<ConstructRef>& seeds) {
  nlohmann::ordered_json doc;
  doc["classes"] = nlohmann::ordered_json::array();
  doc["methods"] = nlohmann::ordered_json::array();
  doc["fields"] = nlohmann::ordered_json::array();
  std::set<ConstructRef> sorted(seeds.begin(), seeds.end());
  for (const auto& ref : sorted) {
    switch (ref.level) {
      case Level::Class: doc["classes"].push_back(detail::ref_to_entry(ref)); break;
      case Level::Method: doc["methods"].push_back(detail::ref_to_entry(ref)); break;
      case Level::Field: doc["fields"].push_back(detail::ref_to_entry(ref)); break;
    }
  }
  return doc.dump(1) + "\n";
}

inline ShrinkPolicy parse_policy_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ShrinkError(ShrinkErrorKind::ConfigError,
                      std::string("policy file is not well-formed JSON: ") +
                          e.what());
  }
  if (!doc.is_object())
    throw ShrinkError(ShrinkErrorKind::ConfigError,
                      "policy: expected an object");
  ShrinkPolicy policy;
  if (doc.contains("mode")) {
    std::string mode = doc.at("mode").get<std::string>();
    if (mode == "conservative") policy = ShrinkPolicy::conservative();
    else if (mode == "aggressive") policy = ShrinkPolicy::aggressive();
    else
      throw ShrinkError(ShrinkErrorKind::ConfigError,
                        "policy.mode: unknown mode \"" + mode + "\"");
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key == "mode") {
      // handled above
    } else if (key == "levels") {
      policy.levels.clear();
      for (const auto& level : it.value()) {
        std::string name = level.get<std::string>();
        if (name == "class") policy.levels.insert(Level::Class);
        else if (name == "method") policy.levels.insert(Level::Method);
        else if (name == "field") policy.levels.insert(Level::Field);
        else
          throw ShrinkError(ShrinkErrorKind::ConfigError,
                            "policy.levels: unknown level \"" + name + "\"");
      }
    } else if (key == "reflection_seeds") {
      policy.reflection_seeds =
          parse_seed_sections(it.value(), "policy.reflection_seeds");
    } else if (key == "keep_annotations") {
      policy.keep_annotations = it.value().get<bool>();
    } else if (key == "keep_serialization_members") {
      policy.keep_serialization_members = it.value().get<bool>();
    } else {
      throw ShrinkError(ShrinkErrorKind::ConfigError,
                        "policy: unknown key \"" + key + "\"");
    }
  }
  policy.validate();
  return policy;
}

}  // namespace deblometer
