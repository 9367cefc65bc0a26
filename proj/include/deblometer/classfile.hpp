// classfile.hpp -- structural model of JVM class files plus the binary
// codec. Parsing validates every constant-pool reference against its
// expected tag and reports dangling indices with the referencing site;
// emission rebuilds the pool in first-use order with deduplication, so
// emitted files are canonical and never contain dangling references.
#pragma once

#include <array>
#include <cstring>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "deblometer/bytes.hpp"
#include "deblometer/construct.hpp"
#include "deblometer/descriptor.hpp"

namespace deblometer {

// ---------------------------------------------------------------------------
// Errors

enum class ClassErrorKind {
  BadMagic,
  TruncatedInput,
  DanglingPoolIndex,
  UnsupportedMajorVersion,
  UnsupportedConstantTag,
  UnknownOpcode,
  InvariantViolation,
};

class ClassFileError : public std::runtime_error {
public:
  ClassFileError(ClassErrorKind kind, const std::string& what_arg,
                 std::size_t pool_index = 0)
      : std::runtime_error(what_arg), kind(kind), pool_index(pool_index) {}

  ClassErrorKind kind;
  std::size_t pool_index;  // meaningful for DanglingPoolIndex
};

// ---------------------------------------------------------------------------
// Access flags (JVMS tables 4.1 / 4.5 / 4.6)

inline constexpr u2 ACC_PUBLIC = 0x0001;
inline constexpr u2 ACC_PRIVATE = 0x0002;
inline constexpr u2 ACC_PROTECTED = 0x0004;
inline constexpr u2 ACC_STATIC = 0x0008;
inline constexpr u2 ACC_FINAL = 0x0010;
inline constexpr u2 ACC_SUPER = 0x0020;
inline constexpr u2 ACC_SYNCHRONIZED = 0x0020;
inline constexpr u2 ACC_VOLATILE = 0x0040;
inline constexpr u2 ACC_BRIDGE = 0x0040;
inline constexpr u2 ACC_TRANSIENT = 0x0080;
inline constexpr u2 ACC_VARARGS = 0x0080;
inline constexpr u2 ACC_NATIVE = 0x0100;
inline constexpr u2 ACC_INTERFACE = 0x0200;
inline constexpr u2 ACC_ABSTRACT = 0x0400;
inline constexpr u2 ACC_STRICT = 0x0800;
inline constexpr u2 ACC_SYNTHETIC = 0x1000;
inline constexpr u2 ACC_ANNOTATION = 0x2000;
inline constexpr u2 ACC_ENUM = 0x4000;

// Constant pool tags.
enum CpTag : u1 {
  CP_Utf8 = 1,
  CP_Integer = 3,
  CP_Float = 4,
  CP_Long = 5,
  CP_Double = 6,
  CP_Class = 7,
  CP_String = 8,
  CP_Fieldref = 9,
  CP_Methodref = 10,
  CP_InterfaceMethodref = 11,
  CP_NameAndType = 12,
  CP_MethodHandle = 15,
  CP_MethodType = 16,
  CP_InvokeDynamic = 18,
};

inline constexpr u4 kClassMagic = 0xCAFEBABE;
inline constexpr u2 kEmitMajorVersion = 52;  // earliest with invokedynamic + lambdas
inline constexpr u2 kMinSupportedMajor = 45;
inline constexpr u2 kMaxSupportedMajor = 61;

// Method handle reference kinds.
enum RefKind : u1 {
  REF_getField = 1,
  REF_getStatic = 2,
  REF_putField = 3,
  REF_putStatic = 4,
  REF_invokeVirtual = 5,
  REF_invokeStatic = 6,
  REF_invokeSpecial = 7,
  REF_newInvokeSpecial = 8,
  REF_invokeInterface = 9,
};

// ---------------------------------------------------------------------------
// Symbolic constants (resolved, pool-index free)

struct ClassConst {
  std::string binary_name;
  bool operator==(const ClassConst&) const = default;
  auto operator<=>(const ClassConst&) const = default;
};

struct StringConst {
  std::string value;
  bool operator==(const StringConst&) const = default;
  auto operator<=>(const StringConst&) const = default;
};

struct MethodTypeConst {
  std::string descriptor;
  bool operator==(const MethodTypeConst&) const = default;
  auto operator<=>(const MethodTypeConst&) const = default;
};

struct MemberRefData {
  std::string owner;  // binary class name
  std::string name;
  std::string descriptor;
  bool operator==(const MemberRefData&) const = default;
  auto operator<=>(const MemberRefData&) const = default;
};

struct MethodHandleConst {
  u1 kind = REF_invokeStatic;
  bool owner_is_interface = false;
  MemberRefData ref;
  bool operator==(const MethodHandleConst&) const = default;
};

using LoadableConst =
    std::variant<std::int32_t, std::int64_t, float, double, StringConst,
                 ClassConst, MethodHandleConst, MethodTypeConst>;

// ---------------------------------------------------------------------------
// Instructions. Constant-pool operands are symbolic; everything else keeps
// its raw operand bytes (all fixed-width forms re-emit at identical width,
// so branch offsets and switch padding survive round trips untouched).

struct MethodRefOp {
  std::string owner;
  std::string name;
  std::string descriptor;
  bool interface_owner = false;  // true when the pool entry is InterfaceMethodref
  bool operator==(const MethodRefOp&) const = default;
};

struct FieldRefOp {
  std::string owner;
  std::string name;
  std::string descriptor;
  bool operator==(const FieldRefOp&) const = default;
};

struct TypeRefOp {
  std::string binary_name;
  bool operator==(const TypeRefOp&) const = default;
};

struct MultiArrayOp {
  std::string binary_name;
  u1 dimensions = 1;
  bool operator==(const MultiArrayOp&) const = default;
};

struct LoadConstOp {
  LoadableConst value;
  bool operator==(const LoadConstOp&) const = default;
};

struct InvokeDynamicOp {
  u2 bootstrap_index = 0;  // into the class's BootstrapMethods attribute
  std::string name;
  std::string descriptor;
  bool operator==(const InvokeDynamicOp&) const = default;
};

struct RawOp {
  Bytes operands;
  bool operator==(const RawOp&) const = default;
};

using Operand = std::variant<std::monostate, MethodRefOp, FieldRefOp, TypeRefOp,
                             MultiArrayOp, LoadConstOp, InvokeDynamicOp, RawOp>;

struct Instruction {
  u1 opcode = 0;
  Operand operand;
  bool operator==(const Instruction&) const = default;
};

// Opcodes used by the fixture generator and the reachability scan.
namespace op {
inline constexpr u1 nop = 0, aconst_null = 1, iconst_0 = 3, iconst_1 = 4,
                    iconst_2 = 5, iconst_3 = 6, iconst_4 = 7, iconst_5 = 8,
                    lconst_0 = 9, bipush = 16, sipush = 17, ldc = 18,
                    ldc_w = 19, ldc2_w = 20, iload = 21, aload = 25,
                    iload_0 = 26, iload_1 = 27, aload_0 = 42, aload_1 = 43,
                    aload_2 = 44, istore = 54, astore = 58, istore_1 = 60,
                    istore_2 = 61, astore_1 = 76, astore_2 = 77, pop = 87,
                    dup = 89, iadd = 96, isub = 100, imul = 104, iinc = 132,
                    i2l = 133, i2d = 135, ifeq = 153, ifne = 154,
                    if_icmpne = 160, goto_ = 167, ireturn = 172, lreturn = 173,
                    dreturn = 175, areturn = 176, return_ = 177,
                    getstatic = 178, putstatic = 179, getfield = 180,
                    putfield = 181, invokevirtual = 182, invokespecial = 183,
                    invokestatic = 184, invokeinterface = 185,
                    invokedynamic = 186, new_ = 187, newarray = 188,
                    anewarray = 189, arraylength = 190, athrow = 191,
                    checkcast = 192, instanceof_ = 193, multianewarray = 197,
                    ifnull = 198, ifnonnull = 199, goto_w = 200;
}  // namespace op

namespace detail {

// Extra operand bytes per opcode, excluding the constant-pool forms and the
// variable-length ones (tableswitch/lookupswitch/wide), which are handled
// explicitly. -1 marks opcodes without a fixed simple width.
inline int plain_operand_width(u1 opcode) {
  static const std::array<int, 202> table = [] {
    std::array<int, 202> t{};
    t.fill(0);
    auto set = [&t](int o, int w) { t[static_cast<std::size_t>(o)] = w; };
    set(16, 1);  // bipush
    set(17, 2);  // sipush
    for (int o = 21; o <= 25; ++o) set(o, 1);  // iload..aload
    for (int o = 54; o <= 58; ++o) set(o, 1);  // istore..astore
    set(132, 2);                               // iinc
    for (int o = 153; o <= 168; ++o) set(o, 2);  // if*/goto/jsr
    set(169, 1);                                 // ret
    set(170, -1);                                // tableswitch
    set(171, -1);                                // lookupswitch
    set(188, 1);                                 // newarray
    set(196, -1);                                // wide
    set(200, 4);                                 // goto_w
    set(201, 4);                                 // jsr_w
    return t;
  }();
  if (opcode >= table.size()) return -2;
  return table[opcode];
}

inline bool is_cp_opcode(u1 o) {
  return o == op::ldc || o == op::ldc_w || o == op::ldc2_w ||
         (o >= op::getstatic && o <= op::invokedynamic) || o == op::new_ ||
         o == op::anewarray || o == op::checkcast || o == op::instanceof_ ||
         o == op::multianewarray;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Attributes

struct AttributeRecord;

struct ExceptionHandler {
  u2 start_pc = 0;
  u2 end_pc = 0;
  u2 handler_pc = 0;
  std::optional<std::string> catch_type;  // nullopt = catch-all
  bool operator==(const ExceptionHandler&) const = default;
};

struct CodeAttr {
  u2 max_stack = 0;
  u2 max_locals = 0;
  std::vector<Instruction> instructions;
  std::vector<ExceptionHandler> handlers;
  std::vector<AttributeRecord> attributes;
  bool operator==(const CodeAttr& other) const;
};

struct ExceptionsAttr {
  std::vector<std::string> exception_types;  // binary names
  bool operator==(const ExceptionsAttr&) const = default;
};

struct InnerClassEntry {
  std::string inner_class;
  std::optional<std::string> outer_class;  // nullopt for anonymous/local
  std::optional<std::string> inner_name;
  u2 access_flags = 0;
  bool operator==(const InnerClassEntry&) const = default;
};

struct InnerClassesAttr {
  std::vector<InnerClassEntry> entries;
  bool operator==(const InnerClassesAttr&) const = default;
};

struct BootstrapMethod {
  MethodHandleConst method_ref;
  std::vector<LoadableConst> arguments;
  bool operator==(const BootstrapMethod&) const = default;
};

struct BootstrapMethodsAttr {
  std::vector<BootstrapMethod> methods;
  bool operator==(const BootstrapMethodsAttr&) const = default;
};

struct SignatureAttr {
  std::string signature;
  bool operator==(const SignatureAttr&) const = default;
};

struct SourceFileAttr {
  std::string file;
  bool operator==(const SourceFileAttr&) const = default;
};

struct Annotation;

struct EnumConstValue {
  std::string type_descriptor;
  std::string const_name;
  bool operator==(const EnumConstValue&) const = default;
};

/// One annotation element value; tag follows JVMS 4.7.16.1. Nested
/// annotations ('@') and arrays ('[') recurse through vectors.
struct ElementValue {
  char tag = 'I';
  std::variant<LoadableConst,            // B C D F I J S Z s c (c = class descriptor string in LoadableConst? no: see note)
               std::string,              // s (string) and c (class descriptor)
               EnumConstValue,           // e
               std::vector<Annotation>,  // @ (exactly one element)
               std::vector<ElementValue>  // [
               >
      value;
  bool operator==(const ElementValue& other) const;
};

struct Annotation {
  std::string type_descriptor;  // "LAnnotation/Tracked;"
  std::vector<std::pair<std::string, ElementValue>> elements;
  bool operator==(const Annotation&) const = default;
};

inline bool ElementValue::operator==(const ElementValue& other) const {
  return tag == other.tag && value == other.value;
}

struct AnnotationsAttr {  // RuntimeVisibleAnnotations
  std::vector<Annotation> annotations;
  bool operator==(const AnnotationsAttr&) const = default;
};

struct UnknownAttr {
  std::string name;
  Bytes payload;  // preserved opaquely, re-emitted verbatim
  bool operator==(const UnknownAttr&) const = default;
};

struct AttributeRecord {
  std::variant<CodeAttr, ExceptionsAttr, InnerClassesAttr, BootstrapMethodsAttr,
               SignatureAttr, AnnotationsAttr, SourceFileAttr, UnknownAttr>
      value;
  bool operator==(const AttributeRecord& other) const {
    return value == other.value;
  }
};

inline bool CodeAttr::operator==(const CodeAttr& other) const {
  return max_stack == other.max_stack && max_locals == other.max_locals &&
         instructions == other.instructions && handlers == other.handlers &&
         attributes == other.attributes;
}

// ---------------------------------------------------------------------------
// Members and the class unit

struct FieldMember {
  std::string name;
  std::string descriptor;
  u2 access_flags = 0;
  std::vector<AttributeRecord> attributes;
  bool operator==(const FieldMember&) const = default;
};

struct MethodMember {
  std::string name;  // includes "<init>" / "<clinit>"
  std::string descriptor;
  u2 access_flags = 0;
  std::vector<AttributeRecord> attributes;
  bool operator==(const MethodMember&) const = default;

  const CodeAttr* code() const {
    for (const auto& a : attributes)
      if (const auto* c = std::get_if<CodeAttr>(&a.value)) return c;
    return nullptr;
  }
  bool is_abstract() const { return access_flags & ACC_ABSTRACT; }
  bool is_static() const { return access_flags & ACC_STATIC; }
  bool is_initializer() const {
    return name == "<init>" || name == "<clinit>";
  }
};

struct ClassUnit {
  u2 minor_version = 0;
  u2 major_version = kEmitMajorVersion;
  u2 access_flags = ACC_PUBLIC | ACC_SUPER;
  std::string binary_name;
  std::optional<std::string> super_name;  // nullopt only for java/lang/Object
  std::vector<std::string> interfaces;
  std::vector<FieldMember> fields;
  std::vector<MethodMember> methods;
  std::vector<AttributeRecord> attributes;
  bool operator==(const ClassUnit&) const = default;

  bool is_interface() const { return access_flags & ACC_INTERFACE; }
  bool is_abstract() const { return access_flags & ACC_ABSTRACT; }
  bool is_annotation() const { return access_flags & ACC_ANNOTATION; }

  const BootstrapMethodsAttr* bootstrap_methods() const {
    for (const auto& a : attributes)
      if (const auto* b = std::get_if<BootstrapMethodsAttr>(&a.value)) return b;
    return nullptr;
  }
  const AnnotationsAttr* annotations() const {
    for (const auto& a : attributes)
      if (const auto* b = std::get_if<AnnotationsAttr>(&a.value)) return b;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// Construct-ref translation (binary descriptors -> source-like names)

inline ConstructRef class_ref_of(const ClassUnit& unit) {
  auto split = split_binary_name(unit.binary_name);
  return ConstructRef::cls(split.package, split.simple_name);
}

inline ConstructRef method_ref_of(const ClassUnit& unit,
                                  const MethodMember& m) {
  auto split = split_binary_name(unit.binary_name);
  auto names = method_type_names(m.descriptor);
  return ConstructRef::method(split.simple_name, m.name, names.return_type,
                              std::move(names.params));
}

inline ConstructRef field_ref_of(const ClassUnit& unit, const FieldMember& f) {
  auto split = split_binary_name(unit.binary_name);
  return ConstructRef::field(split.simple_name, f.name);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

struct PoolEntry {
  u1 tag = 0;
  u2 a = 0;      // first index operand
  u2 b = 0;      // second index operand
  u1 kind = 0;   // MethodHandle reference kind
  u4 bits32 = 0;
  u8 bits64 = 0;
  std::string text;  // Utf8 payload
};

class ParsedPool {
public:
  std::vector<PoolEntry> entries;  // slot 0 unused

  const PoolEntry& at(std::size_t idx, const std::string& site,
                      u1 expected_tag) const {
    if (idx == 0 || idx >= entries.size() || entries[idx].tag == 0)
      throw ClassFileError(ClassErrorKind::DanglingPoolIndex,
                           "constant pool index " + std::to_string(idx) +
                               " referenced by " + site +
                               " does not resolve to any entry",
                           idx);
    const PoolEntry& e = entries[idx];
    if (expected_tag != 0 && e.tag != expected_tag)
      throw ClassFileError(ClassErrorKind::DanglingPoolIndex,
                           "constant pool index " + std::to_string(idx) +
                               " referenced by " + site + " has tag " +
                               std::to_string(e.tag) + ", expected " +
                               std::to_string(expected_tag),
                           idx);
    return e;
  }

  std::string utf8(std::size_t idx, const std::string& site) const {
    return at(idx, site, CP_Utf8).text;
  }

  std::string class_name(std::size_t idx, const std::string& site) const {
    const PoolEntry& e = at(idx, site, CP_Class);
    return utf8(e.a, site + " (class name)");
  }

  std::pair<std::string, std::string> name_and_type(
      std::size_t idx, const std::string& site) const {
    const PoolEntry& e = at(idx, site, CP_NameAndType);
    return {utf8(e.a, site + " (name)"), utf8(e.b, site + " (descriptor)")};
  }

  // Accepts Fieldref/Methodref/InterfaceMethodref per the allowed set.
  MemberRefData member_ref(std::size_t idx, const std::string& site,
                           std::initializer_list<u1> allowed_tags,
                           u1* actual_tag = nullptr) const {
    const PoolEntry& e = at(idx, site, 0);
    bool ok = false;
    for (u1 t : allowed_tags) ok = ok || e.tag == t;
    if (!ok)
      throw ClassFileError(ClassErrorKind::DanglingPoolIndex,
                           "constant pool index " + std::to_string(idx) +
                               " referenced by " + site +
                               " is not a member reference of the expected kind",
                           idx);
    if (actual_tag) *actual_tag = e.tag;
    MemberRefData ref;
    ref.owner = class_name(e.a, site + " (owner)");
    auto nt = name_and_type(e.b, site);
    ref.name = nt.first;
    ref.descriptor = nt.second;
    return ref;
  }

  MethodHandleConst method_handle(std::size_t idx,
                                  const std::string& site) const {
    const PoolEntry& e = at(idx, site, CP_MethodHandle);
    MethodHandleConst mh;
    mh.kind = e.kind;
    u1 actual = 0;
    if (e.kind >= REF_getField && e.kind <= REF_putStatic) {
      mh.ref = member_ref(e.a, site + " (field ref)", {CP_Fieldref}, &actual);
    } else if (e.kind == REF_invokeInterface) {
      mh.ref = member_ref(e.a, site + " (interface method ref)",
                          {CP_InterfaceMethodref}, &actual);
    } else {
      mh.ref = member_ref(e.a, site + " (method ref)",
                          {CP_Methodref, CP_InterfaceMethodref}, &actual);
    }
    mh.owner_is_interface = actual == CP_InterfaceMethodref;
    return mh;
  }

  LoadableConst loadable(std::size_t idx, const std::string& site) const {
    const PoolEntry& e = at(idx, site, 0);
    switch (e.tag) {
      case CP_Integer: return static_cast<std::int32_t>(e.bits32);
      case CP_Long: return static_cast<std::int64_t>(e.bits64);
      case CP_Float: return std::bit_cast<float>(e.bits32);
      case CP_Double: return std::bit_cast<double>(e.bits64);
      case CP_String: return StringConst{utf8(e.a, site + " (string)")};
      case CP_Class: return ClassConst{utf8(e.a, site + " (class name)")};
      case CP_MethodHandle: return method_handle(idx, site);
      case CP_MethodType:
        return MethodTypeConst{utf8(e.a, site + " (method type)")};
      default:
        throw ClassFileError(ClassErrorKind::DanglingPoolIndex,
                             "constant pool index " + std::to_string(idx) +
                                 " referenced by " + site +
                                 " is not a loadable constant",
                             idx);
    }
  }
};

inline ParsedPool parse_pool(ByteReader& in) {
  ParsedPool pool;
  u2 count = in.read_u2();
  pool.entries.resize(count);
  for (std::size_t i = 1; i < count; ++i) {
    PoolEntry& e = pool.entries[i];
    e.tag = in.read_u1();
    switch (e.tag) {
      case CP_Utf8: {
        u2 len = in.read_u2();
        e.text = in.read_string(len);
        break;
      }
      case CP_Integer:
      case CP_Float:
        e.bits32 = in.read_u4();
        break;
      case CP_Long:
      case CP_Double:
        e.bits64 = in.read_u8();
        ++i;  // wide entries take two slots
        break;
      case CP_Class:
      case CP_String:
      case CP_MethodType:
        e.a = in.read_u2();
        break;
      case CP_Fieldref:
      case CP_Methodref:
      case CP_InterfaceMethodref:
      case CP_NameAndType:
      case CP_InvokeDynamic:
        e.a = in.read_u2();
        e.b = in.read_u2();
        break;
      case CP_MethodHandle:
        e.kind = in.read_u1();
        e.a = in.read_u2();
        break;
      default:
        throw ClassFileError(ClassErrorKind::UnsupportedConstantTag,
                             "unsupported constant pool tag " +
                                 std::to_string(e.tag) + " in slot " +
                                 std::to_string(i));
    }
  }
  return pool;
}

}  // namespace detail

namespace detail {

std::vector<AttributeRecord> parse_attributes(ByteReader& in,
                                              const ParsedPool& pool,
                                              const std::string& site);

inline ElementValue parse_element_value(ByteReader& in, const ParsedPool& pool,
                                        const std::string& site);

inline Annotation parse_annotation(ByteReader& in, const ParsedPool& pool,
                                   const std::string& site) {
  Annotation a;
  a.type_descriptor = pool.utf8(in.read_u2(), site + " annotation type_index");
  u2 pairs = in.read_u2();
  for (u2 i = 0; i < pairs; ++i) {
    std::string name = pool.utf8(in.read_u2(), site + " element name");
    a.elements.emplace_back(std::move(name),
                            parse_element_value(in, pool, site));
  }
  return a;
}

inline ElementValue parse_element_value(ByteReader& in, const ParsedPool& pool,
                                        const std::string& site) {
  ElementValue v;
  v.tag = static_cast<char>(in.read_u1());
  switch (v.tag) {
    case 'B': case 'C': case 'I': case 'S': case 'Z': {
      const PoolEntry& e = pool.at(in.read_u2(), site + " element value", CP_Integer);
      v.value = LoadableConst{static_cast<std::int32_t>(e.bits32)};
      break;
    }
    case 'J': {
      const PoolEntry& e = pool.at(in.read_u2(), site + " element value", CP_Long);
      v.value = LoadableConst{static_cast<std::int64_t>(e.bits64)};
      break;
    }
    case 'F': {
      const PoolEntry& e = pool.at(in.read_u2(), site + " element value", CP_Float);
      v.value = LoadableConst{std::bit_cast<float>(e.bits32)};
      break;
    }
    case 'D': {
      const PoolEntry& e = pool.at(in.read_u2(), site + " element value", CP_Double);
      v.value = LoadableConst{std::bit_cast<double>(e.bits64)};
      break;
    }
    case 's':
    case 'c':
      v.value = pool.utf8(in.read_u2(), site + " element value");
      break;
    case 'e': {
      EnumConstValue ev;
      ev.type_descriptor = pool.utf8(in.read_u2(), site + " enum type");
      ev.const_name = pool.utf8(in.read_u2(), site + " enum const");
      v.value = std::move(ev);
      break;
    }
    case '@': {
      std::vector<Annotation> nested;
      nested.push_back(parse_annotation(in, pool, site));
      v.value = std::move(nested);
      break;
    }
    case '[': {
      u2 n = in.read_u2();
      std::vector<ElementValue> items;
      items.reserve(n);
      for (u2 i = 0; i < n; ++i)
        items.push_back(parse_element_value(in, pool, site));
      v.value = std::move(items);
      break;
    }
    default:
      throw ClassFileError(ClassErrorKind::InvariantViolation,
                           "unknown element_value tag '" +
                               std::string(1, v.tag) + "' in " + site);
  }
  return v;
}

inline std::vector<Instruction> parse_code_bytes(const Bytes& code,
                                                 const ParsedPool& pool,
                                                 const std::string& site) {
  std::vector<Instruction> out;
  ByteReader in(code);
  while (!in.at_end()) {
    std::size_t pc = in.pos();
    std::string at = site + " instruction at pc " + std::to_string(pc);
    Instruction inst;
    inst.opcode = in.read_u1();
    if (is_cp_opcode(inst.opcode)) {
      switch (inst.opcode) {
        case op::ldc:
          inst.operand = LoadConstOp{pool.loadable(in.read_u1(), at)};
          break;
        case op::ldc_w:
        case op::ldc2_w:
          inst.operand = LoadConstOp{pool.loadable(in.read_u2(), at)};
          break;
        case op::getstatic:
        case op::putstatic:
        case op::getfield:
        case op::putfield: {
          auto r = pool.member_ref(in.read_u2(), at, {CP_Fieldref});
          inst.operand = FieldRefOp{r.owner, r.name, r.descriptor};
          break;
        }
        case op::invokevirtual: {
          auto r = pool.member_ref(in.read_u2(), at, {CP_Methodref});
          inst.operand = MethodRefOp{r.owner, r.name, r.descriptor, false};
          break;
        }
        case op::invokespecial:
        case op::invokestatic: {
          u1 tag = 0;
          auto r = pool.member_ref(in.read_u2(), at,
                                   {CP_Methodref, CP_InterfaceMethodref}, &tag);
          inst.operand = MethodRefOp{r.owner, r.name, r.descriptor,
                                     tag == CP_InterfaceMethodref};
          break;
        }
        case op::invokeinterface: {
          auto r = pool.member_ref(in.read_u2(), at, {CP_InterfaceMethodref});
          in.skip(2);  // count + zero, recomputed on emit
          inst.operand = MethodRefOp{r.owner, r.name, r.descriptor, true};
          break;
        }
        case op::invokedynamic: {
          const PoolEntry& e = pool.at(in.read_u2(), at, CP_InvokeDynamic);
          in.skip(2);
          auto nt = pool.name_and_type(e.b, at);
          inst.operand = InvokeDynamicOp{e.a, nt.first, nt.second};
          break;
        }
        case op::new_:
        case op::anewarray:
        case op::checkcast:
        case op::instanceof_:
          inst.operand = TypeRefOp{pool.class_name(in.read_u2(), at)};
          break;
        case op::multianewarray: {
          std::string name = pool.class_name(in.read_u2(), at);
          inst.operand = MultiArrayOp{std::move(name), in.read_u1()};
          break;
        }
      }
      out.push_back(std::move(inst));
      continue;
    }
    int width = plain_operand_width(inst.opcode);
    if (width == -2)
      throw ClassFileError(ClassErrorKind::UnknownOpcode,
                           "unknown opcode " + std::to_string(inst.opcode) +
                               " in " + at);
    if (width == -1) {
      // Variable-width forms: keep the exact operand bytes (switch padding
      // depends on pc, which emission preserves).
      std::size_t start = in.pos();
      if (inst.opcode == 196) {  // wide
        u1 widened = in.read_u1();
        in.skip(widened == op::iinc ? 4 : 2);
      } else {
        // Pad to a 4-byte boundary relative to the code array start.
        while (in.pos() % 4 != 0) in.skip(1);
        std::int32_t default_off = static_cast<std::int32_t>(in.read_u4());
        (void)default_off;
        if (inst.opcode == 170) {  // tableswitch
          std::int32_t low = static_cast<std::int32_t>(in.read_u4());
          std::int32_t high = static_cast<std::int32_t>(in.read_u4());
          if (high < low)
            throw ClassFileError(ClassErrorKind::InvariantViolation,
                                 "tableswitch bounds invalid in " + at);
          in.skip(static_cast<std::size_t>(high - low + 1) * 4);
        } else {  // lookupswitch
          u4 npairs = in.read_u4();
          in.skip(static_cast<std::size_t>(npairs) * 8);
        }
      }
      std::size_t len = in.pos() - start;
      in.seek(start);
      inst.operand = RawOp{in.read_bytes(len)};
    } else if (width > 0) {
      inst.operand = RawOp{in.read_bytes(static_cast<std::size_t>(width))};
    }
    out.push_back(std::move(inst));
  }
  return out;
}

inline AttributeRecord parse_one_attribute(ByteReader& in,
                                           const ParsedPool& pool,
                                           const std::string& site) {
  std::string name = pool.utf8(in.read_u2(), site + " attribute name");
  u4 length = in.read_u4();
  Bytes payload = in.read_bytes(length);
  ByteReader body(payload);
  std::string at = site + " " + name;
  AttributeRecord rec;

  auto finish = [&](auto&& attr) {
    if (!body.at_end())
      throw ClassFileError(ClassErrorKind::TruncatedInput,
                           "attribute " + at + " has trailing bytes");
    rec.value = std::forward<decltype(attr)>(attr);
  };

  if (name == "Code") {
    CodeAttr code;
    code.max_stack = body.read_u2();
    code.max_locals = body.read_u2();
    u4 code_len = body.read_u4();
    Bytes code_bytes = body.read_bytes(code_len);
    code.instructions = parse_code_bytes(code_bytes, pool, at);
    u2 handlers = body.read_u2();
    for (u2 i = 0; i < handlers; ++i) {
      ExceptionHandler h;
      h.start_pc = body.read_u2();
      h.end_pc = body.read_u2();
      h.handler_pc = body.read_u2();
      u2 type_idx = body.read_u2();
      if (type_idx != 0)
        h.catch_type = pool.class_name(type_idx, at + " catch_type");
      code.handlers.push_back(std::move(h));
    }
    code.attributes = parse_attributes(body, pool, at);
    finish(std::move(code));
  } else if (name == "Exceptions") {
    ExceptionsAttr ex;
    u2 n = body.read_u2();
    for (u2 i = 0; i < n; ++i)
      ex.exception_types.push_back(
          pool.class_name(body.read_u2(), at + " entry"));
    finish(std::move(ex));
  } else if (name == "InnerClasses") {
    InnerClassesAttr ic;
    u2 n = body.read_u2();
    for (u2 i = 0; i < n; ++i) {
      InnerClassEntry e;
      e.inner_class = pool.class_name(body.read_u2(), at + " inner_class");
      u2 outer = body.read_u2();
      if (outer != 0) e.outer_class = pool.class_name(outer, at + " outer_class");
      u2 inner_name = body.read_u2();
      if (inner_name != 0)
        e.inner_name = pool.utf8(inner_name, at + " inner_name");
      e.access_flags = body.read_u2();
      ic.entries.push_back(std::move(e));
    }
    finish(std::move(ic));
  } else if (name == "BootstrapMethods") {
    BootstrapMethodsAttr bm;
    u2 n = body.read_u2();
    for (u2 i = 0; i < n; ++i) {
      BootstrapMethod m;
      m.method_ref = pool.method_handle(body.read_u2(), at + " bootstrap ref");
      u2 argc = body.read_u2();
      for (u2 j = 0; j < argc; ++j)
        m.arguments.push_back(pool.loadable(body.read_u2(), at + " argument"));
      bm.methods.push_back(std::move(m));
    }
    finish(std::move(bm));
  } else if (name == "Signature") {
    finish(SignatureAttr{pool.utf8(body.read_u2(), at)});
  } else if (name == "SourceFile") {
    finish(SourceFileAttr{pool.utf8(body.read_u2(), at)});
  } else if (name == "RuntimeVisibleAnnotations") {
    AnnotationsAttr anns;
    u2 n = body.read_u2();
    for (u2 i = 0; i < n; ++i)
      anns.annotations.push_back(parse_annotation(body, pool, at));
    finish(std::move(anns));
  } else {
    rec.value = UnknownAttr{std::move(name), std::move(payload)};
  }
  return rec;
}

inline std::vector<AttributeRecord> parse_attributes(ByteReader& in,
                                                     const ParsedPool& pool,
                                                     const std::string& site) {
  u2 count = in.read_u2();
  std::vector<AttributeRecord> out;
  out.reserve(count);
  for (u2 i = 0; i < count; ++i)
    out.push_back(parse_one_attribute(in, pool, site));
  return out;
}

}  // namespace detail

/// Parses a class file. All constant-pool references are validated against
/// their expected tags; a reference into a deleted or mistyped slot raises
/// DanglingPoolIndex naming the index and the referencing site.
inline ClassUnit parse_class(std::span<const u1> bytes) {
  try {
    ByteReader in(bytes);
    if (in.remaining() < 4 || in.read_u4() != kClassMagic)
      throw ClassFileError(ClassErrorKind::BadMagic,
                           "not a class file (bad magic)");
    ClassUnit unit;
    unit.minor_version = in.read_u2();
    unit.major_version = in.read_u2();
    if (unit.major_version < kMinSupportedMajor ||
        unit.major_version > kMaxSupportedMajor)
      throw ClassFileError(
          ClassErrorKind::UnsupportedMajorVersion,
          "unsupported class file major version " +
              std::to_string(unit.major_version) + " (supported: " +
              std::to_string(kMinSupportedMajor) + "-" +
              std::to_string(kMaxSupportedMajor) + ")");
    detail::ParsedPool pool = detail::parse_pool(in);
    unit.access_flags = in.read_u2();
    unit.binary_name = pool.class_name(in.read_u2(), "this_class");
    u2 super_idx = in.read_u2();
    if (super_idx != 0)
      unit.super_name = pool.class_name(super_idx, "super_class");
    u2 ifc_count = in.read_u2();
    for (u2 i = 0; i < ifc_count; ++i)
      unit.interfaces.push_back(
          pool.class_name(in.read_u2(), "interface " + std::to_string(i)));
    u2 field_count = in.read_u2();
    for (u2 i = 0; i < field_count; ++i) {
      std::string site = "field " + std::to_string(i);
      FieldMember f;
      f.access_flags = in.read_u2();
      f.name = pool.utf8(in.read_u2(), site + " name");
      f.descriptor = pool.utf8(in.read_u2(), site + " descriptor");
      field_type_name(f.descriptor);  // grammar check
      f.attributes = detail::parse_attributes(in, pool, site);
      unit.fields.push_back(std::move(f));
    }
    u2 method_count = in.read_u2();
    for (u2 i = 0; i < method_count; ++i) {
      std::string site = "method " + std::to_string(i);
      MethodMember m;
      m.access_flags = in.read_u2();
      m.name = pool.utf8(in.read_u2(), site + " name");
      m.descriptor = pool.utf8(in.read_u2(), site + " descriptor");
      method_type_names(m.descriptor);  // grammar check
      m.attributes = detail::parse_attributes(in, pool, site + " (" + m.name + ")");
      unit.methods.push_back(std::move(m));
    }
    unit.attributes = detail::parse_attributes(in, pool, "class");
    if (!in.at_end())
      throw ClassFileError(ClassErrorKind::TruncatedInput,
                           "trailing bytes after class structure");
    return unit;
  } catch (const TruncatedInput& e) {
    throw ClassFileError(ClassErrorKind::TruncatedInput, e.what());
  } catch (const MalformedDescriptor& e) {
    throw ClassFileError(ClassErrorKind::InvariantViolation, e.what());
  }
}

// ---------------------------------------------------------------------------
// Emission

namespace detail {

class PoolBuilder {
public:
  u2 utf8(const std::string& s) {
    return intern(utf8_, s, [&] {
      writer_.write_u1(CP_Utf8);
      writer_.write_u2(static_cast<u2>(s.size()));
      writer_.write_string(s);
      return 1;
    });
  }

  u2 class_(const std::string& binary_name) {
    u2 name = utf8(binary_name);
    return intern(class_map_, name, [&] {
      writer_.write_u1(CP_Class);
      writer_.write_u2(name);
      return 1;
    });
  }

  u2 string_(const std::string& value) {
    u2 v = utf8(value);
    return intern(string_map_, v, [&] {
      writer_.write_u1(CP_String);
      writer_.write_u2(v);
      return 1;
    });
  }

  u2 integer(std::int32_t v) {
    return intern(int_map_, v, [&] {
      writer_.write_u1(CP_Integer);
      writer_.write_u4(static_cast<u4>(v));
      return 1;
    });
  }

  u2 long_(std::int64_t v) {
    return intern(long_map_, v, [&] {
      writer_.write_u1(CP_Long);
      writer_.write_u8(static_cast<u8>(v));
      return 2;
    });
  }

  u2 float_(float v) {
    return intern(float_map_, std::bit_cast<u4>(v), [&] {
      writer_.write_u1(CP_Float);
      writer_.write_u4(std::bit_cast<u4>(v));
      return 1;
    });
  }

  u2 double_(double v) {
    return intern(double_map_, std::bit_cast<u8>(v), [&] {
      writer_.write_u1(CP_Double);
      writer_.write_u8(std::bit_cast<u8>(v));
      return 2;
    });
  }

  u2 name_and_type(const std::string& name, const std::string& descriptor) {
    u2 n = utf8(name), d = utf8(descriptor);
    return intern(nat_map_, std::make_pair(n, d), [&] {
      writer_.write_u1(CP_NameAndType);
      writer_.write_u2(n);
      writer_.write_u2(d);
      return 1;
    });
  }

  u2 member(u1 tag, const std::string& owner, const std::string& name,
            const std::string& descriptor) {
    u2 c = class_(owner);
    u2 nt = name_and_type(name, descriptor);
    return intern(member_map_, std::make_tuple(tag, c, nt), [&] {
      writer_.write_u1(tag);
      writer_.write_u2(c);
      writer_.write_u2(nt);
      return 1;
    });
  }

  u2 method_handle(const MethodHandleConst& mh) {
    u1 ref_tag;
    if (mh.kind >= REF_getField && mh.kind <= REF_putStatic)
      ref_tag = CP_Fieldref;
    else if (mh.kind == REF_invokeInterface || mh.owner_is_interface)
      ref_tag = CP_InterfaceMethodref;
    else
      ref_tag = CP_Methodref;
    u2 ref = member(ref_tag, mh.ref.owner, mh.ref.name, mh.ref.descriptor);
    return intern(mh_map_, std::make_pair(mh.kind, ref), [&] {
      writer_.write_u1(CP_MethodHandle);
      writer_.write_u1(mh.kind);
      writer_.write_u2(ref);
      return 1;
    });
  }

  u2 method_type(const std::string& descriptor) {
    u2 d = utf8(descriptor);
    return intern(mt_map_, d, [&] {
      writer_.write_u1(CP_MethodType);
      writer_.write_u2(d);
      return 1;
    });
  }

  u2 invoke_dynamic(u2 bootstrap_index, const std::string& name,
                    const std::string& descriptor) {
    u2 nt = name_and_type(name, descriptor);
    return intern(indy_map_, std::make_pair(bootstrap_index, nt), [&] {
      writer_.write_u1(CP_InvokeDynamic);
      writer_.write_u2(bootstrap_index);
      writer_.write_u2(nt);
      return 1;
    });
  }

  u2 loadable(const LoadableConst& c) {
    return std::visit(
        [this](const auto& v) -> u2 {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::int32_t>) return integer(v);
          else if constexpr (std::is_same_v<T, std::int64_t>) return long_(v);
          else if constexpr (std::is_same_v<T, float>) return float_(v);
          else if constexpr (std::is_same_v<T, double>) return double_(v);
          else if constexpr (std::is_same_v<T, StringConst>) return string_(v.value);
          else if constexpr (std::is_same_v<T, ClassConst>) return class_(v.binary_name);
          else if constexpr (std::is_same_v<T, MethodHandleConst>) return method_handle(v);
          else return method_type(v.descriptor);
        },
        c);
  }

  u2 count() const { return next_; }
  const Bytes& bytes() const { return writer_.bytes(); }

private:
  template <typename Map, typename Key, typename WriteFn>
  u2 intern(Map& map, const Key& key, WriteFn write) {
    auto it = map.find(key);
    if (it != map.end()) return it->second;
    u2 slot = next_;
    int slots = write();
    next_ = static_cast<u2>(next_ + slots);
    if (next_ < slot)
      throw ClassFileError(ClassErrorKind::InvariantViolation,
                           "constant pool overflow");
    map.emplace(key, slot);
    return slot;
  }

  ByteWriter writer_;
  u2 next_ = 1;
  std::map<std::string, u2> utf8_;
  std::map<u2, u2> class_map_, string_map_, mt_map_;
  std::map<std::int32_t, u2> int_map_;
  std::map<std::int64_t, u2> long_map_;
  std::map<u4, u2> float_map_;
  std::map<u8, u2> double_map_;
  std::map<std::pair<u2, u2>, u2> nat_map_, indy_map_;
  std::map<std::tuple<u1, u2, u2>, u2> member_map_;
  std::map<std::pair<u1, u2>, u2> mh_map_;
};

inline void emit_element_value(ByteWriter& out, PoolBuilder& pool,
                               const ElementValue& v);

inline void emit_annotation(ByteWriter& out, PoolBuilder& pool,
                            const Annotation& a) {
  out.write_u2(pool.utf8(a.type_descriptor));
  out.write_u2(static_cast<u2>(a.elements.size()));
  for (const auto& [name, value] : a.elements) {
    out.write_u2(pool.utf8(name));
    emit_element_value(out, pool, value);
  }
}

inline void emit_element_value(ByteWriter& out, PoolBuilder& pool,
                               const ElementValue& v) {
  out.write_u1(static_cast<u1>(v.tag));
  switch (v.tag) {
    case 'B': case 'C': case 'I': case 'S': case 'Z':
    case 'J': case 'F': case 'D':
      out.write_u2(pool.loadable(std::get<LoadableConst>(v.value)));
      break;
    case 's':
    case 'c':
      out.write_u2(pool.utf8(std::get<std::string>(v.value)));
      break;
    case 'e': {
      const auto& e = std::get<EnumConstValue>(v.value);
      out.write_u2(pool.utf8(e.type_descriptor));
      out.write_u2(pool.utf8(e.const_name));
      break;
    }
    case '@':
      emit_annotation(out, pool, std::get<std::vector<Annotation>>(v.value).at(0));
      break;
    case '[': {
      const auto& items = std::get<std::vector<ElementValue>>(v.value);
      out.write_u2(static_cast<u2>(items.size()));
      for (const auto& item : items) emit_element_value(out, pool, item);
      break;
    }
    default:
      throw ClassFileError(ClassErrorKind::InvariantViolation,
                           "unknown element_value tag on emit");
  }
}

inline Bytes emit_code_bytes(const CodeAttr& code, PoolBuilder& pool,
                             const ClassUnit& unit, const std::string& site) {
  ByteWriter out;
  for (const auto& inst : code.instructions) {
    out.write_u1(inst.opcode);
    std::visit(
        [&](const auto& operand) {
          using T = std::decay_t<decltype(operand)>;
          if constexpr (std::is_same_v<T, std::monostate>) {
            // no operands
          } else if constexpr (std::is_same_v<T, MethodRefOp>) {
            u1 tag = operand.interface_owner ? CP_InterfaceMethodref
                                             : CP_Methodref;
            u2 idx = pool.member(tag, operand.owner, operand.name,
                                 operand.descriptor);
            out.write_u2(idx);
            if (inst.opcode == op::invokeinterface) {
              out.write_u1(static_cast<u1>(
                  1 + argument_slot_count(operand.descriptor)));
              out.write_u1(0);
            }
          } else if constexpr (std::is_same_v<T, FieldRefOp>) {
            out.write_u2(pool.member(CP_Fieldref, operand.owner, operand.name,
                                     operand.descriptor));
          } else if constexpr (std::is_same_v<T, TypeRefOp>) {
            out.write_u2(pool.class_(operand.binary_name));
          } else if constexpr (std::is_same_v<T, MultiArrayOp>) {
            out.write_u2(pool.class_(operand.binary_name));
            out.write_u1(operand.dimensions);
          } else if constexpr (std::is_same_v<T, LoadConstOp>) {
            u2 idx = pool.loadable(operand.value);
            if (inst.opcode == op::ldc) {
              if (idx > 0xFF)
                throw ClassFileError(
                    ClassErrorKind::InvariantViolation,
                    "ldc constant landed in pool slot " + std::to_string(idx) +
                        " (>255) in " + site + " of " + unit.binary_name);
              out.write_u1(static_cast<u1>(idx));
            } else {
              out.write_u2(idx);
            }
          } else if constexpr (std::is_same_v<T, InvokeDynamicOp>) {
            const auto* bsm = unit.bootstrap_methods();
            if (!bsm || operand.bootstrap_index >= bsm->methods.size())
              throw ClassFileError(
                  ClassErrorKind::InvariantViolation,
                  "invokedynamic in " + site + " of " + unit.binary_name +
                      " references bootstrap method " +
                      std::to_string(operand.bootstrap_index) +
                      " which does not exist");
            out.write_u2(pool.invoke_dynamic(operand.bootstrap_index,
                                             operand.name, operand.descriptor));
            out.write_u1(0);
            out.write_u1(0);
          } else if constexpr (std::is_same_v<T, RawOp>) {
            out.write_bytes(operand.operands);
          }
        },
        inst.operand);
  }
  return out.take();
}

inline void emit_attributes(ByteWriter& out, PoolBuilder& pool,
                            const std::vector<AttributeRecord>& attrs,
                            const ClassUnit& unit, const std::string& site);

inline void emit_one_attribute(ByteWriter& out, PoolBuilder& pool,
                               const AttributeRecord& rec,
                               const ClassUnit& unit, const std::string& site) {
  std::visit(
      [&](const auto& attr) {
        using T = std::decay_t<decltype(attr)>;
        ByteWriter body;
        std::string name;
        if constexpr (std::is_same_v<T, CodeAttr>) {
          name = "Code";
          Bytes code = emit_code_bytes(attr, pool, unit, site);
          body.write_u2(attr.max_stack);
          body.write_u2(attr.max_locals);
          body.write_u4(static_cast<u4>(code.size()));
          body.write_bytes(code);
          body.write_u2(static_cast<u2>(attr.handlers.size()));
          for (const auto& h : attr.handlers) {
            body.write_u2(h.start_pc);
            body.write_u2(h.end_pc);
            body.write_u2(h.handler_pc);
            body.write_u2(h.catch_type ? pool.class_(*h.catch_type) : 0);
          }
          emit_attributes(body, pool, attr.attributes, unit, site);
        } else if constexpr (std::is_same_v<T, ExceptionsAttr>) {
          name = "Exceptions";
          body.write_u2(static_cast<u2>(attr.exception_types.size()));
          for (const auto& t : attr.exception_types)
            body.write_u2(pool.class_(t));
        } else if constexpr (std::is_same_v<T, InnerClassesAttr>) {
          name = "InnerClasses";
          body.write_u2(static_cast<u2>(attr.entries.size()));
          for (const auto& e : attr.entries) {
            body.write_u2(pool.class_(e.inner_class));
            body.write_u2(e.outer_class ? pool.class_(*e.outer_class) : 0);
            body.write_u2(e.inner_name ? pool.utf8(*e.inner_name) : 0);
            body.write_u2(e.access_flags);
          }
        } else if constexpr (std::is_same_v<T, BootstrapMethodsAttr>) {
          name = "BootstrapMethods";
          body.write_u2(static_cast<u2>(attr.methods.size()));
          for (const auto& m : attr.methods) {
            body.write_u2(pool.method_handle(m.method_ref));
            body.write_u2(static_cast<u2>(m.arguments.size()));
            for (const auto& arg : m.arguments)
              body.write_u2(pool.loadable(arg));
          }
        } else if constexpr (std::is_same_v<T, SignatureAttr>) {
          name = "Signature";
          body.write_u2(pool.utf8(attr.signature));
        } else if constexpr (std::is_same_v<T, SourceFileAttr>) {
          name = "SourceFile";
          body.write_u2(pool.utf8(attr.file));
        } else if constexpr (std::is_same_v<T, AnnotationsAttr>) {
          name = "RuntimeVisibleAnnotations";
          body.write_u2(static_cast<u2>(attr.annotations.size()));
          for (const auto& a : attr.annotations)
            emit_annotation(body, pool, a);
        } else if constexpr (std::is_same_v<T, UnknownAttr>) {
          name = attr.name;
          body.write_bytes(attr.payload);
        }
        out.write_u2(pool.utf8(name));
        out.write_u4(static_cast<u4>(body.size()));
        out.write_bytes(body.bytes());
      },
      rec.value);
}

inline void emit_attributes(ByteWriter& out, PoolBuilder& pool,
                            const std::vector<AttributeRecord>& attrs,
                            const ClassUnit& unit, const std::string& site) {
  out.write_u2(static_cast<u2>(attrs.size()));
  for (const auto& a : attrs) emit_one_attribute(out, pool, a, unit, site);
}

}  // namespace detail

/// Emits a class file. Output is deterministic: the constant pool is laid
/// out in first-use order with deduplication, members in declaration order.
inline Bytes emit_class(const ClassUnit& unit) {
  if (unit.binary_name.empty())
    throw ClassFileError(ClassErrorKind::InvariantViolation,
                         "class unit has no binary name");
  for (const auto& m : unit.methods) {
    bool has_code = m.code() != nullptr;
    bool needs_code = !(m.access_flags & (ACC_ABSTRACT | ACC_NATIVE));
    if (needs_code && !has_code)
      throw ClassFileError(ClassErrorKind::InvariantViolation,
                           "method " + unit.binary_name + "." + m.name +
                               " is concrete but has no Code attribute");
    if (!needs_code && has_code)
      throw ClassFileError(ClassErrorKind::InvariantViolation,
                           "method " + unit.binary_name + "." + m.name +
                               " is abstract/native but has a Code attribute");
    method_type_names(m.descriptor);
  }
  for (const auto& f : unit.fields) field_type_name(f.descriptor);

  detail::PoolBuilder pool;
  ByteWriter body;
  body.write_u2(unit.access_flags);
  body.write_u2(pool.class_(unit.binary_name));
  body.write_u2(unit.super_name ? pool.class_(*unit.super_name) : 0);
  body.write_u2(static_cast<u2>(unit.interfaces.size()));
  for (const auto& ifc : unit.interfaces) body.write_u2(pool.class_(ifc));
  body.write_u2(static_cast<u2>(unit.fields.size()));
  for (const auto& f : unit.fields) {
    body.write_u2(f.access_flags);
    body.write_u2(pool.utf8(f.name));
    body.write_u2(pool.utf8(f.descriptor));
    detail::emit_attributes(body, pool, f.attributes, unit,
                            "field " + f.name);
  }
  body.write_u2(static_cast<u2>(unit.methods.size()));
  for (const auto& m : unit.methods) {
    body.write_u2(m.access_flags);
    body.write_u2(pool.utf8(m.name));
    body.write_u2(pool.utf8(m.descriptor));
    detail::emit_attributes(body, pool, m.attributes, unit,
                            "method " + m.name);
  }
  detail::emit_attributes(body, pool, unit.attributes, unit, "class");

  ByteWriter out;
  out.write_u4(kClassMagic);
  out.write_u2(unit.minor_version);
  out.write_u2(unit.major_version);
  out.write_u2(pool.count());
  out.write_bytes(pool.bytes());
  out.write_bytes(body.bytes());
  return out.take();
}

}  // namespace deblometer
