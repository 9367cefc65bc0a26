#include "doctest.h"

#include "deblometer/assembler.hpp"
#include "deblometer/classfile.hpp"

using namespace deblometer;

namespace {

ClassUnit empty_class() {
  return ClassBuilder("Empty").build();
}

ClassUnit richer_class() {
  return ClassBuilder("demo/Widget")
      .source_file("Widget.java")
      .implements("java/io/Serializable")
      .signature("Ljava/lang/Object;Ljava/io/Serializable;")
      .annotate("Ldemo/Tag;")
      .field("count", "I", ACC_PRIVATE)
      .field("label", "Ljava/lang/String;", ACC_PRIVATE | ACC_FINAL)
      .default_ctor(ACC_PUBLIC)
      .method("bump", "()V", ACC_PUBLIC,
              CodeBuilder{}
                  .aload(0)
                  .aload(0)
                  .getfield("demo/Widget", "count", "I")
                  .iconst(1)
                  .plain(op::iadd)
                  .putfield("demo/Widget", "count", "I")
                  .vreturn()
                  .build(),
              3, 1)
      .abstract_method("describe", "()Ljava/lang/String;",
                       ACC_PUBLIC | ACC_ABSTRACT)
      .build();
}

}  // namespace

TEST_CASE("minimal class round-trips and carries no members") {
  ClassUnit unit = empty_class();
  Bytes bytes = emit_class(unit);
  ClassUnit back = parse_class(bytes);
  CHECK(back.fields.size() == 0);
  CHECK(back.methods.size() == 0);
  CHECK(back.binary_name == "Empty");
  CHECK(back.super_name == "java/lang/Object");
  CHECK(back == unit);
}

TEST_CASE("bad magic is rejected") {
  Bytes bytes = emit_class(empty_class());
  bytes[3] = 0xBF;  // 0xCAFEBABF
  try {
    parse_class(bytes);
    FAIL("expected BadMagic");
  } catch (const ClassFileError& e) {
    CHECK(e.kind == ClassErrorKind::BadMagic);
  }
}

TEST_CASE("truncated input is reported as such") {
  Bytes bytes = emit_class(richer_class());
  Bytes cut(bytes.begin(), bytes.begin() + static_cast<long>(bytes.size() / 2));
  try {
    parse_class(cut);
    FAIL("expected TruncatedInput");
  } catch (const ClassFileError& e) {
    CHECK(e.kind == ClassErrorKind::TruncatedInput);
  }
}

TEST_CASE("unsupported major versions are rejected above the ceiling") {
  Bytes bytes = emit_class(empty_class());
  bytes[6] = 0;
  bytes[7] = 70;  // major 70
  try {
    parse_class(bytes);
    FAIL("expected UnsupportedMajorVersion");
  } catch (const ClassFileError& e) {
    CHECK(e.kind == ClassErrorKind::UnsupportedMajorVersion);
  }
  // Oldest supported still parses.
  bytes[7] = 45;
  CHECK(parse_class(bytes).major_version == 45);
}

TEST_CASE("structural round-trip and emit determinism on a rich class") {
  ClassUnit unit = richer_class();
  Bytes a = emit_class(unit);
  Bytes b = emit_class(unit);
  CHECK(a == b);

  ClassUnit back = parse_class(a);
  CHECK(back == unit);

  // Canonical fixpoint: emit(parse(emit(u))) is byte-identical.
  CHECK(emit_class(back) == a);
}

TEST_CASE("emit rejects concrete methods without code") {
  ClassUnit unit = empty_class();
  MethodMember broken;
  broken.name = "orphan";
  broken.descriptor = "()V";
  broken.access_flags = ACC_PUBLIC;
  unit.methods.push_back(broken);
  try {
    emit_class(unit);
    FAIL("expected InvariantViolation");
  } catch (const ClassFileError& e) {
    CHECK(e.kind == ClassErrorKind::InvariantViolation);
    CHECK(std::string(e.what()).find("orphan") != std::string::npos);
  }
}

TEST_CASE("constant pool is deduplicated") {
  // Two methods touching the same field: the Fieldref (and its substructure)
  // must be interned once. Count occurrences of the UTF8 payload "count".
  ClassUnit unit = ClassBuilder("demo/Dedup")
                       .field("count", "I", ACC_PRIVATE)
                       .default_ctor()
                       .method("a", "()V", ACC_PUBLIC,
                               CodeBuilder{}
                                   .aload(0)
                                   .getfield("demo/Dedup", "count", "I")
                                   .plain(op::pop)
                                   .vreturn()
                                   .build())
                       .method("b", "()V", ACC_PUBLIC,
                               CodeBuilder{}
                                   .aload(0)
                                   .getfield("demo/Dedup", "count", "I")
                                   .plain(op::pop)
                                   .vreturn()
                                   .build())
                       .build();
  Bytes bytes = emit_class(unit);
  std::string needle = "count";
  int occurrences = 0;
  for (std::size_t i = 0; i + needle.size() <= bytes.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), bytes.begin() + static_cast<long>(i)))
      ++occurrences;
  CHECK(occurrences == 1);
  CHECK(parse_class(bytes) == unit);
}

namespace {

// Hand-built class whose RuntimeVisibleAnnotations type_index points at a
// constant-pool slot that no longer holds a UTF8 entry -- the corruption
// shape produced by incomplete annotation removal in external shrinkers.
Bytes corrupted_annotation_class(u2 dangling_index) {
  ByteWriter w;
  w.write_u4(kClassMagic);
  w.write_u2(0);
  w.write_u2(52);
  w.write_u2(5);  // pool count: slots 1..4
  // 1: Utf8 "Corrupt"
  w.write_u1(CP_Utf8); w.write_u2(7); w.write_string("Corrupt");
  // 2: Class -> 1
  w.write_u1(CP_Class); w.write_u2(1);
  // 3: Utf8 "RuntimeVisibleAnnotations"
  std::string attr = "RuntimeVisibleAnnotations";
  w.write_u1(CP_Utf8); w.write_u2(static_cast<u2>(attr.size())); w.write_string(attr);
  // 4: Integer 7 (wrong tag for an annotation type_index)
  w.write_u1(CP_Integer); w.write_u4(7);
  w.write_u2(ACC_PUBLIC | ACC_SUPER);
  w.write_u2(2);  // this_class
  w.write_u2(0);  // super (irregular but irrelevant here)
  w.write_u2(0);  // interfaces
  w.write_u2(0);  // fields
  w.write_u2(0);  // methods
  w.write_u2(1);  // one class attribute
  w.write_u2(3);  // name: RuntimeVisibleAnnotations
  w.write_u4(4);  // length
  w.write_u2(1);  // num_annotations
  w.write_u2(dangling_index);  // annotation type_index
  // (annotation is truncated after type_index on purpose: the dangling
  // reference must be reported before the truncation is reached)
  return w.take();
}

}  // namespace

TEST_CASE("dangling pool references surface as diagnosable errors") {
  SUBCASE("index into an emptied slot") {
    try {
      parse_class(corrupted_annotation_class(99));
      FAIL("expected DanglingPoolIndex");
    } catch (const ClassFileError& e) {
      CHECK(e.kind == ClassErrorKind::DanglingPoolIndex);
      CHECK(e.pool_index == 99);
      CHECK(std::string(e.what()).find("RuntimeVisibleAnnotations") !=
            std::string::npos);
    }
  }
  SUBCASE("index at a slot with the wrong tag") {
    try {
      parse_class(corrupted_annotation_class(4));
      FAIL("expected DanglingPoolIndex");
    } catch (const ClassFileError& e) {
      CHECK(e.kind == ClassErrorKind::DanglingPoolIndex);
      CHECK(e.pool_index == 4);
    }
  }
}

TEST_CASE("unknown attributes are preserved verbatim") {
  ClassUnit unit = empty_class();
  unit.attributes.push_back(
      {UnknownAttr{"Deprecated", {}}});
  unit.attributes.push_back(
      {UnknownAttr{"CustomBlob", {0xDE, 0xAD, 0xBE, 0xEF}}});
  Bytes bytes = emit_class(unit);
  ClassUnit back = parse_class(bytes);
  CHECK(back == unit);
  CHECK(emit_class(back) == bytes);
}

TEST_CASE("invokedynamic, bootstrap methods and annotations round-trip") {
  BootstrapMethod bsm = lambda_bootstrap(
      "()V", MemberRefData{"demo/Fn", "lambda$run$0", "()V"});
  Annotation valued{"Ldemo/Level;", {{"value", ElementValue{'I', LoadableConst{3}}}}};
  ClassUnit unit =
      ClassBuilder("demo/Fn")
          .bootstrap_method(bsm)
          .annotate_with(valued)
          .default_ctor(ACC_PUBLIC)
          .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                  CodeBuilder{}
                      .invokedynamic(0, "apply", "()Ldemo/Action;")
                      .pop()
                      .vreturn()
                      .build())
          .method("lambda$run$0", "()V",
                  ACC_PRIVATE | ACC_STATIC | ACC_SYNTHETIC,
                  CodeBuilder{}.vreturn().build())
          .build();
  Bytes bytes = emit_class(unit);
  ClassUnit back = parse_class(bytes);
  CHECK(back == unit);
  CHECK(emit_class(back) == bytes);
  REQUIRE(back.bootstrap_methods() != nullptr);
  CHECK(back.bootstrap_methods()->methods.size() == 1);
  CHECK(back.bootstrap_methods()->methods[0].method_ref.ref.owner ==
        "java/lang/invoke/LambdaMetafactory");
}

TEST_CASE("exception handlers with and without catch types round-trip") {
  std::vector<ExceptionHandler> handlers{
      {0, 4, 5, std::string("demo/Oops")},
      {0, 4, 9, std::nullopt},
  };
  ClassUnit unit =
      ClassBuilder("demo/Catcher")
          .default_ctor()
          .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                  CodeBuilder{}
                      .new_("demo/Oops")
                      .dup()
                      .invokespecial("demo/Oops", "<init>", "()V")
                      .athrow()
                      .pop()
                      .vreturn()
                      .build(),
                  2, 1, {}, handlers)
          .build();
  Bytes bytes = emit_class(unit);
  CHECK(parse_class(bytes) == unit);
}

TEST_CASE("construct refs translate binary names and descriptors") {
  ClassUnit main1 = ClassBuilder("Abstract/Main$1", ACC_SUPER, "Abstract/Car")
                        .default_ctor()
                        .method("engine", "()V", ACC_PUBLIC,
                                CodeBuilder{}.vreturn().build())
                        .build();
  CHECK(class_ref_of(main1) == ConstructRef::cls("Abstract", "Main$1"));
  CHECK(method_ref_of(main1, main1.methods[1]) ==
        ConstructRef::method("Main$1", "engine", "void", {}));

  ClassUnit main = ClassBuilder("Abstract/Main")
                       .method("main", "([Ljava/lang/String;)V",
                               ACC_PUBLIC | ACC_STATIC,
                               CodeBuilder{}.vreturn().build())
                       .build();
  ConstructRef r = method_ref_of(main, main.methods[0]);
  CHECK(r.class_name == "Main");
  CHECK(r.member_name == "main");
  CHECK(r.return_type == "void");
  CHECK(r.param_string() == "String[]");

  ClassUnit car = ClassBuilder("Abstract/Car").field("piston", "I", 0).build();
  CHECK(field_ref_of(car, car.fields[0]) == ConstructRef::field("Car", "piston"));

  ClassUnit dflt = ClassBuilder("X").build();
  ConstructRef cr = class_ref_of(dflt);
  CHECK(cr.package == "");
  CHECK(cr.class_name == "X");
}
