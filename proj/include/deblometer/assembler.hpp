// assembler.hpp -- small builders for synthesizing class units: an
// instruction-list builder and a class builder. The fixture generator is
// their main client.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deblometer/classfile.hpp"

namespace deblometer {

class CodeBuilder {
public:
  CodeBuilder& plain(u1 opcode) {
    insts_.push_back({opcode, std::monostate{}});
    return *this;
  }

  CodeBuilder& raw(u1 opcode, Bytes operands) {
    insts_.push_back({opcode, RawOp{std::move(operands)}});
    return *this;
  }

  CodeBuilder& aload(unsigned slot) { return load_store(op::aload, 42, slot); }
  CodeBuilder& iload(unsigned slot) { return load_store(op::iload, 26, slot); }
  CodeBuilder& astore(unsigned slot) { return load_store(op::astore, 75, slot); }
  CodeBuilder& istore(unsigned slot) { return load_store(op::istore, 59, slot); }

  CodeBuilder& iconst(int v) {
    if (v >= -1 && v <= 5) return plain(static_cast<u1>(op::iconst_0 + v));
    if (v >= -128 && v <= 127)
      return raw(op::bipush, {static_cast<u1>(v)});
    if (v >= -32768 && v <= 32767)
      return raw(op::sipush, {static_cast<u1>(v >> 8), static_cast<u1>(v)});
    insts_.push_back({op::ldc, LoadConstOp{static_cast<std::int32_t>(v)}});
    return *this;
  }

  CodeBuilder& ldc_string(std::string value) {
    insts_.push_back({op::ldc, LoadConstOp{StringConst{std::move(value)}}});
    return *this;
  }

  CodeBuilder& ldc_class(std::string binary_name) {
    insts_.push_back({op::ldc, LoadConstOp{ClassConst{std::move(binary_name)}}});
    return *this;
  }

  CodeBuilder& getstatic(std::string owner, std::string name, std::string desc) {
    return field_op(op::getstatic, std::move(owner), std::move(name), std::move(desc));
  }
  CodeBuilder& putstatic(std::string owner, std::string name, std::string desc) {
    return field_op(op::putstatic, std::move(owner), std::move(name), std::move(desc));
  }
  CodeBuilder& getfield(std::string owner, std::string name, std::string desc) {
    return field_op(op::getfield, std::move(owner), std::move(name), std::move(desc));
  }
  CodeBuilder& putfield(std::string owner, std::string name, std::string desc) {
    return field_op(op::putfield, std::move(owner), std::move(name), std::move(desc));
  }

  CodeBuilder& invokevirtual(std::string owner, std::string name, std::string desc) {
    return invoke(op::invokevirtual, std::move(owner), std::move(name), std::move(desc), false);
  }
  CodeBuilder& invokespecial(std::string owner, std::string name, std::string desc) {
    return invoke(op::invokespecial, std::move(owner), std::move(name), std::move(desc), false);
  }
  CodeBuilder& invokestatic(std::string owner, std::string name, std::string desc) {
    return invoke(op::invokestatic, std::move(owner), std::move(name), std::move(desc), false);
  }
  CodeBuilder& invokeinterface(std::string owner, std::string name, std::string desc) {
    return invoke(op::invokeinterface, std::move(owner), std::move(name), std::move(desc), true);
  }

  CodeBuilder& invokedynamic(u2 bootstrap_index, std::string name, std::string desc) {
    insts_.push_back({op::invokedynamic,
                      InvokeDynamicOp{bootstrap_index, std::move(name), std::move(desc)}});
    return *this;
  }

  CodeBuilder& new_(std::string binary_name) {
    insts_.push_back({op::new_, TypeRefOp{std::move(binary_name)}});
    return *this;
  }
  CodeBuilder& checkcast(std::string binary_name) {
    insts_.push_back({op::checkcast, TypeRefOp{std::move(binary_name)}});
    return *this;
  }
  CodeBuilder& anewarray(std::string binary_name) {
    insts_.push_back({op::anewarray, TypeRefOp{std::move(binary_name)}});
    return *this;
  }

  /// Branch with a hand-computed signed 16-bit offset relative to this
  /// instruction's pc (branch opcodes are 3 bytes wide).
  CodeBuilder& branch(u1 opcode, std::int16_t offset) {
    return raw(opcode, {static_cast<u1>(offset >> 8), static_cast<u1>(offset)});
  }

  CodeBuilder& dup() { return plain(op::dup); }
  CodeBuilder& pop() { return plain(op::pop); }
  CodeBuilder& vreturn() { return plain(op::return_); }
  CodeBuilder& ireturn() { return plain(op::ireturn); }
  CodeBuilder& areturn() { return plain(op::areturn); }
  CodeBuilder& athrow() { return plain(op::athrow); }

  std::vector<Instruction> build() { return std::move(insts_); }

private:
  CodeBuilder& load_store(u1 wide_form, u1 short_base, unsigned slot) {
    if (slot <= 3) return plain(static_cast<u1>(short_base + slot));
    return raw(wide_form, {static_cast<u1>(slot)});
  }

  CodeBuilder& field_op(u1 opcode, std::string owner, std::string name,
                        std::string desc) {
    insts_.push_back({opcode, FieldRefOp{std::move(owner), std::move(name),
                                         std::move(desc)}});
    return *this;
  }

  CodeBuilder& invoke(u1 opcode, std::string owner, std::string name,
                      std::string desc, bool iface) {
    insts_.push_back({opcode, MethodRefOp{std::move(owner), std::move(name),
                                          std::move(desc), iface}});
    return *this;
  }

  std::vector<Instruction> insts_;
};

inline Annotation marker_annotation(const std::string& type_descriptor) {
  return Annotation{type_descriptor, {}};
}

class ClassBuilder {
public:
  explicit ClassBuilder(std::string binary_name,
                        u2 access = ACC_PUBLIC | ACC_SUPER,
                        std::string super = "java/lang/Object") {
    unit_.binary_name = std::move(binary_name);
    unit_.access_flags = access;
    unit_.super_name = std::move(super);
  }

  ClassBuilder& implements(std::string iface) {
    unit_.interfaces.push_back(std::move(iface));
    return *this;
  }

  ClassBuilder& signature(std::string sig) {
    unit_.attributes.push_back({SignatureAttr{std::move(sig)}});
    return *this;
  }

  ClassBuilder& annotate(std::string type_descriptor) {
    return annotate_with(marker_annotation(type_descriptor));
  }

  ClassBuilder& annotate_with(Annotation a) {
    class_annotations_.push_back(std::move(a));
    return *this;
  }

  ClassBuilder& source_file(std::string name) {
    source_file_ = std::move(name);
    return *this;
  }

  ClassBuilder& inner_class(std::string inner, std::optional<std::string> outer,
                            std::optional<std::string> inner_name, u2 flags) {
    inner_classes_.push_back(
        {std::move(inner), std::move(outer), std::move(inner_name), flags});
    return *this;
  }

  ClassBuilder& field(std::string name, std::string descriptor, u2 access,
                      std::vector<Annotation> annotations = {}) {
    FieldMember f;
    f.name = std::move(name);
    f.descriptor = std::move(descriptor);
    f.access_flags = access;
    if (!annotations.empty())
      f.attributes.push_back({AnnotationsAttr{std::move(annotations)}});
    unit_.fields.push_back(std::move(f));
    return *this;
  }

  ClassBuilder& method(std::string name, std::string descriptor, u2 access,
                       std::vector<Instruction> code, u2 max_stack = 8,
                       u2 max_locals = 8,
                       std::vector<Annotation> annotations = {},
                       std::vector<ExceptionHandler> handlers = {}) {
    MethodMember m;
    m.name = std::move(name);
    m.descriptor = std::move(descriptor);
    m.access_flags = access;
    CodeAttr c;
    c.max_stack = max_stack;
    c.max_locals = max_locals;
    c.instructions = std::move(code);
    c.handlers = std::move(handlers);
    m.attributes.push_back({std::move(c)});
    if (!annotations.empty())
      m.attributes.push_back({AnnotationsAttr{std::move(annotations)}});
    unit_.methods.push_back(std::move(m));
    return *this;
  }

  ClassBuilder& abstract_method(std::string name, std::string descriptor,
                                u2 access = ACC_PUBLIC | ACC_ABSTRACT) {
    MethodMember m;
    m.name = std::move(name);
    m.descriptor = std::move(descriptor);
    m.access_flags = access;
    unit_.methods.push_back(std::move(m));
    return *this;
  }

  /// Plain  "<init>()V { super.<init>(); }" constructor.
  ClassBuilder& default_ctor(u2 access = 0) {
    std::string super = unit_.super_name.value_or("java/lang/Object");
    return method("<init>", "()V", access,
                  CodeBuilder{}
                      .aload(0)
                      .invokespecial(super, "<init>", "()V")
                      .vreturn()
                      .build(),
                  1, 1);
  }

  ClassBuilder& bootstrap_method(BootstrapMethod bsm) {
    bootstrap_.push_back(std::move(bsm));
    return *this;
  }

  ClassUnit build() {
    ClassUnit out = std::move(unit_);
    if (source_file_) out.attributes.push_back({SourceFileAttr{*source_file_}});
    if (!class_annotations_.empty())
      out.attributes.push_back({AnnotationsAttr{std::move(class_annotations_)}});
    if (!inner_classes_.empty())
      out.attributes.push_back({InnerClassesAttr{std::move(inner_classes_)}});
    if (!bootstrap_.empty())
      out.attributes.push_back({BootstrapMethodsAttr{std::move(bootstrap_)}});
    return out;
  }

private:
  ClassUnit unit_;
  std::optional<std::string> source_file_;
  std::vector<Annotation> class_annotations_;
  std::vector<InnerClassEntry> inner_classes_;
  std::vector<BootstrapMethod> bootstrap_;
};

/// Bootstrap entry for a LambdaMetafactory.metafactory call site whose
/// implementation is a static fixture method.
inline BootstrapMethod lambda_bootstrap(const std::string& sam_descriptor,
                                        const MemberRefData& impl_method) {
  BootstrapMethod bsm;
  bsm.method_ref.kind = REF_invokeStatic;
  bsm.method_ref.ref = {
      "java/lang/invoke/LambdaMetafactory", "metafactory",
      "(Ljava/lang/invoke/MethodHandles$Lookup;Ljava/lang/String;"
      "Ljava/lang/invoke/MethodType;Ljava/lang/invoke/MethodType;"
      "Ljava/lang/invoke/MethodHandle;Ljava/lang/invoke/MethodType;)"
      "Ljava/lang/invoke/CallSite;"};
  MethodHandleConst impl;
  impl.kind = REF_invokeStatic;
  impl.ref = impl_method;
  bsm.arguments = {MethodTypeConst{sam_descriptor}, impl,
                   MethodTypeConst{sam_descriptor}};
  return bsm;
}

}  // namespace deblometer
