// bench_support.hpp -- shared scaffolding for the feature suite builders:
// the feature catalog, per-case specs, ground-truth sugar and the recurring
// bytecode shapes (serialization calls, reflective lookups, annotation
// types).
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "deblometer/assembler.hpp"
#include "deblometer/ground_truth.hpp"

namespace deblometer {

enum class Feature {
  Abstract,
  Annotation,
  Deserialization,
  DynamicClassLoading,
  Exception,
  Externalization,
  Generics,
  Interface,
  Lambda,
  Overloading,
  Overriding,
  Reflection,
  Serialization,
};

inline constexpr std::array<Feature, 13> kAllFeatures = {
    Feature::Abstract,       Feature::Annotation,
    Feature::Deserialization, Feature::DynamicClassLoading,
    Feature::Exception,      Feature::Externalization,
    Feature::Generics,       Feature::Interface,
    Feature::Lambda,         Feature::Overloading,
    Feature::Overriding,     Feature::Reflection,
    Feature::Serialization,
};

inline const char* feature_name(Feature f) {
  switch (f) {
    case Feature::Abstract: return "abstract";
    case Feature::Annotation: return "annotation";
    case Feature::Deserialization: return "deserialization";
    case Feature::DynamicClassLoading: return "dynamic class loading";
    case Feature::Exception: return "exception";
    case Feature::Externalization: return "externalization";
    case Feature::Generics: return "generics";
    case Feature::Interface: return "interface";
    case Feature::Lambda: return "lambda";
    case Feature::Overloading: return "overloading";
    case Feature::Overriding: return "overriding";
    case Feature::Reflection: return "reflection";
    case Feature::Serialization: return "serialization";
  }
  return "?";
}

inline std::string feature_slug(Feature f) {
  std::string out = feature_name(f);
  for (auto& c : out)
    if (c == ' ') c = '-';
  return out;
}

inline const char* feature_package(Feature f) {
  switch (f) {
    case Feature::Abstract: return "Abstract";
    case Feature::Annotation: return "Annotation";
    case Feature::Deserialization: return "Deserialization";
    case Feature::DynamicClassLoading: return "DynamicLoading";
    case Feature::Exception: return "Exception";
    case Feature::Externalization: return "Externalization";
    case Feature::Generics: return "Generics";
    case Feature::Interface: return "Interface";
    case Feature::Lambda: return "Lambda";
    case Feature::Overloading: return "Overloading";
    case Feature::Overriding: return "Overriding";
    case Feature::Reflection: return "Reflection";
    case Feature::Serialization: return "Serialization";
  }
  return "?";
}

/// Test cases per feature.
inline std::size_t expected_case_count(Feature f) {
  switch (f) {
    case Feature::Abstract: return 6;
    case Feature::Annotation: return 7;
    case Feature::Deserialization: return 2;
    case Feature::DynamicClassLoading: return 2;
    case Feature::Exception: return 4;
    case Feature::Externalization: return 2;
    case Feature::Generics: return 7;
    case Feature::Interface: return 4;
    case Feature::Lambda: return 4;
    case Feature::Overloading: return 6;
    case Feature::Overriding: return 4;
    case Feature::Reflection: return 6;
    case Feature::Serialization: return 5;
  }
  return 0;
}

namespace bench {

struct CaseSpec {
  std::string id;
  std::string technique;
  std::vector<ClassUnit> classes;
  GroundTruth truth;
};

struct SuiteSpec {
  Feature feature = Feature::Abstract;
  std::string package;
  std::string entry_simple_name = "Main";
  std::vector<CaseSpec> cases;
  std::vector<ConstructRef> seeds;  // string-referenced targets, when any
};

/// Ground-truth construction sugar used by the suite builders.
class Truth {
public:
  Truth& rc(std::string pkg, std::string name) {
    gt_.classes.required.insert(ConstructRef::cls(std::move(pkg), std::move(name)));
    return *this;
  }
  Truth& bc(std::string pkg, std::string name) {
    gt_.classes.bloated.insert(ConstructRef::cls(std::move(pkg), std::move(name)));
    return *this;
  }
  Truth& rm(std::string type, std::string name, std::string ret,
            const std::string& params_csv = "") {
    gt_.methods.required.insert(ConstructRef::method(
        std::move(type), std::move(name), std::move(ret),
        split_param_string(params_csv)));
    return *this;
  }
  Truth& bm(std::string type, std::string name, std::string ret,
            const std::string& params_csv = "") {
    gt_.methods.bloated.insert(ConstructRef::method(
        std::move(type), std::move(name), std::move(ret),
        split_param_string(params_csv)));
    return *this;
  }
  Truth& rf(std::string cls, std::string name) {
    gt_.fields.required.insert(ConstructRef::field(std::move(cls), std::move(name)));
    return *this;
  }
  Truth& bf(std::string cls, std::string name) {
    gt_.fields.bloated.insert(ConstructRef::field(std::move(cls), std::move(name)));
    return *this;
  }
  Truth& methods_absent() {
    gt_.methods.absent = true;
    return *this;
  }
  Truth& fields_absent() {
    gt_.fields.absent = true;
    return *this;
  }
  GroundTruth build() { return std::move(gt_); }

private:
  GroundTruth gt_;
};

/// Marker annotation type: an @interface with no members.
inline ClassUnit annotation_type(const std::string& binary_name) {
  ClassUnit unit =
      ClassBuilder(binary_name,
                   ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT | ACC_ANNOTATION)
          .implements("java/lang/annotation/Annotation")
          .build();
  return unit;
}

/// Annotation type with a single int member "value()".
inline ClassUnit annotation_type_with_value(const std::string& binary_name) {
  return ClassBuilder(binary_name,
                      ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT | ACC_ANNOTATION)
      .implements("java/lang/annotation/Annotation")
      .abstract_method("value", "()I", ACC_PUBLIC | ACC_ABSTRACT)
      .build();
}

inline std::string annotation_descriptor(const std::string& binary_name) {
  return "L" + binary_name + ";";
}

/// new T(); leaves the instance on the stack.
inline CodeBuilder& construct(CodeBuilder& cb, const std::string& binary) {
  return cb.new_(binary).dup().invokespecial(binary, "<init>", "()V");
}

/// ObjectOutputStream(new ByteArrayOutputStream()).writeObject(local N).
inline CodeBuilder& write_object_shape(CodeBuilder& cb, unsigned obj_slot,
                                       unsigned scratch_slot) {
  construct(cb, "java/io/ByteArrayOutputStream").astore(scratch_slot);
  cb.new_("java/io/ObjectOutputStream")
      .dup()
      .aload(scratch_slot)
      .invokespecial("java/io/ObjectOutputStream", "<init>",
                     "(Ljava/io/OutputStream;)V")
      .aload(obj_slot)
      .invokevirtual("java/io/ObjectOutputStream", "writeObject",
                     "(Ljava/lang/Object;)V");
  return cb;
}

/// ObjectInputStream.readObject() call shape; leaves an Object on the stack.
inline CodeBuilder& read_object_shape(CodeBuilder& cb, unsigned scratch_slot) {
  cb.new_("java/io/ByteArrayInputStream")
      .dup()
      .iconst(0)
      .raw(op::newarray, {8 /* T_BYTE */})
      .invokespecial("java/io/ByteArrayInputStream", "<init>", "([B)V")
      .astore(scratch_slot)
      .new_("java/io/ObjectInputStream")
      .dup()
      .aload(scratch_slot)
      .invokespecial("java/io/ObjectInputStream", "<init>",
                     "(Ljava/io/InputStream;)V")
      .invokevirtual("java/io/ObjectInputStream", "readObject",
                     "()Ljava/lang/Object;");
  return cb;
}

/// Class.isAnnotationPresent(Marker.class) check on a class constant.
inline CodeBuilder& annotation_check_shape(CodeBuilder& cb,
                                           const std::string& subject_binary,
                                           const std::string& marker_binary) {
  return cb.ldc_class(subject_binary)
      .ldc_class(marker_binary)
      .invokevirtual("java/lang/Class", "isAnnotationPresent",
                     "(Ljava/lang/Class;)Z")
      .pop();
}

/// getClass().getDeclaredMethod(name, new Class[0]).invoke(obj, null) shape.
inline CodeBuilder& reflective_invoke_shape(CodeBuilder& cb, unsigned obj_slot,
                                            const std::string& method_name) {
  return cb.aload(obj_slot)
      .invokevirtual("java/lang/Object", "getClass", "()Ljava/lang/Class;")
      .ldc_string(method_name)
      .iconst(0)
      .anewarray("java/lang/Class")
      .invokevirtual("java/lang/Class", "getDeclaredMethod",
                     "(Ljava/lang/String;[Ljava/lang/Class;)"
                     "Ljava/lang/reflect/Method;")
      .aload(obj_slot)
      .plain(op::aconst_null)
      .invokevirtual("java/lang/reflect/Method", "invoke",
                     "(Ljava/lang/Object;[Ljava/lang/Object;)"
                     "Ljava/lang/Object;")
      .pop();
}

/// Static run()V driver class with the given body.
inline ClassUnit demo_class(const std::string& binary,
                            std::vector<Instruction> run_body,
                            u2 max_stack = 8, u2 max_locals = 8) {
  return ClassBuilder(binary)
      .default_ctor(ACC_PUBLIC)
      .method("run", "()V", ACC_PUBLIC | ACC_STATIC, std::move(run_body),
              max_stack, max_locals)
      .build();
}

/// Suite main: executes the first case inline and dispatches to the other
/// cases' run() drivers.
inline CodeBuilder& call_runs(CodeBuilder& cb, const std::string& package,
                              const std::vector<std::string>& demo_classes) {
  for (const auto& name : demo_classes)
    cb.invokestatic(package + "/" + name, "run", "()V");
  return cb;
}

}  // namespace bench
}  // namespace deblometer
