// Serialization feature suite: object graphs written through the built-in
// streams. The method level is not evaluated for this feature (no required
// methods exist), so every case marks it absent; classes and fields carry
// the accounting.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec serialization_suite() {
  using namespace bench;
  const std::string P = "Serialization";
  SuiteSpec suite;
  suite.feature = Feature::Serialization;
  suite.package = P;

  // Case 1: standard serialization of one object (suite main drives).
  {
    CaseSpec c;
    c.id = "serialization-standard";
    c.technique = "single serializable note is written out; a static tagline "
                  "never participates in the stream";
    ClassUnit note = ClassBuilder(P + "/Note")
                         .implements("java/io/Serializable")
                         .field("text", "Ljava/lang/String;", ACC_PRIVATE)
                         .field("tagline", "Ljava/lang/String;",
                                ACC_PRIVATE | ACC_STATIC)
                         .default_ctor(ACC_PUBLIC)
                         .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/Note").astore(1);
                      cb.aload(1)
                          .ldc_string("hi")
                          .putfield(P + "/Note", "text", "Ljava/lang/String;");
                      write_object_shape(cb, 1, 2);
                      call_runs(cb, P, {"DeepSerialDemo", "InheritSerialDemo",
                                        "StatelessDemo", "UnusedSerialDemo"});
                      return cb.vreturn().build();
                    }(),
                    4, 3)
            .build();
    c.classes = {main, note};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Note")
                  .methods_absent()
                  .rf("Note", "text")
                  .bf("Note", "tagline")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: deep serialization of a nested object graph.
  {
    CaseSpec c;
    c.id = "serialization-deep-graph";
    c.technique = "outer object embeds another serializable object; both "
                  "travel through the stream together";
    ClassUnit inner =
        ClassBuilder(P + "/Inner")
            .implements("java/io/Serializable")
            .field("depth", "I", ACC_PRIVATE)
            .field("padding", "I", ACC_PRIVATE | ACC_STATIC)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial("java/lang/Object", "<init>", "()V")
                        .aload(0)
                        .iconst(3)
                        .putfield(P + "/Inner", "depth", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit outer = ClassBuilder(P + "/Outer")
                          .implements("java/io/Serializable")
                          .field("inner", "L" + P + "/Inner;", ACC_PRIVATE)
                          .default_ctor(ACC_PUBLIC)
                          .build();
    ClassUnit demo = demo_class(P + "/DeepSerialDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Outer").astore(0);
      construct(cb, P + "/Inner").astore(1);
      cb.aload(0).aload(1).putfield(P + "/Outer", "inner", "L" + P + "/Inner;");
      write_object_shape(cb, 0, 2);
      return cb.vreturn().build();
    }(), 4, 3);
    c.classes = {inner, outer, demo};
    c.truth = Truth{}
                  .rc(P, "Inner").rc(P, "Outer").rc(P, "DeepSerialDemo")
                  .methods_absent()
                  .rf("Outer", "inner")
                  .rf("Inner", "depth")
                  .bf("Inner", "padding")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: serialization through an inheritance chain.
  {
    CaseSpec c;
    c.id = "serialization-inheritance";
    c.technique = "subclass instance serializes state declared on both "
                  "levels; a fossil sibling never reaches a stream";
    ClassUnit creature =
        ClassBuilder(P + "/Creature")
            .implements("java/io/Serializable")
            .field("genus", "Ljava/lang/String;", ACC_PROTECTED)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial("java/lang/Object", "<init>", "()V")
                        .aload(0)
                        .ldc_string("aves")
                        .putfield(P + "/Creature", "genus",
                                  "Ljava/lang/String;")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit bird =
        ClassBuilder(P + "/Bird", ACC_PUBLIC | ACC_SUPER, P + "/Creature")
            .field("wings", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Creature", "<init>", "()V")
                        .aload(0)
                        .iconst(2)
                        .putfield(P + "/Bird", "wings", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit fossil =
        ClassBuilder(P + "/Fossil", ACC_PUBLIC | ACC_SUPER, P + "/Creature")
            .field("era", "Ljava/lang/String;", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Creature", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/InheritSerialDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Bird").astore(0);
      write_object_shape(cb, 0, 1);
      return cb.vreturn().build();
    }(), 4, 2);
    c.classes = {creature, bird, fossil, demo};
    c.truth = Truth{}
                  .rc(P, "Creature").rc(P, "Bird").rc(P, "InheritSerialDemo")
                  .bc(P, "Fossil")
                  .methods_absent()
                  .rf("Creature", "genus")
                  .rf("Bird", "wings")
                  .bf("Fossil", "era")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: stateless serializable class -- nothing meaningful to persist.
  {
    CaseSpec c;
    c.id = "serialization-stateless";
    c.technique = "marker-only serializable class carries no instance state; "
                  "its static version stamp is dead weight";
    ClassUnit blank = ClassBuilder(P + "/Blank")
                          .implements("java/io/Serializable")
                          .field("VERSION", "I",
                                 ACC_PRIVATE | ACC_STATIC | ACC_FINAL)
                          .default_ctor(ACC_PUBLIC)
                          .build();
    ClassUnit demo = demo_class(P + "/StatelessDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Blank").astore(0);
      write_object_shape(cb, 0, 1);
      return cb.vreturn().build();
    }(), 4, 2);
    c.classes = {blank, demo};
    c.truth = Truth{}
                  .rc(P, "Blank").rc(P, "StatelessDemo")
                  .methods_absent()
                  .bf("Blank", "VERSION")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 5: a serializable archive class that nothing serializes.
  {
    CaseSpec c;
    c.id = "serialization-unused-class";
    c.technique = "ticket is serialized; the archive class implements the "
                  "marker interface yet never reaches a stream";
    ClassUnit ticket =
        ClassBuilder(P + "/Ticket")
            .implements("java/io/Serializable")
            .field("id", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial("java/lang/Object", "<init>", "()V")
                        .aload(0)
                        .iconst(7)
                        .putfield(P + "/Ticket", "id", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit archive = ClassBuilder(P + "/Archive")
                            .implements("java/io/Serializable")
                            .field("contents", "Ljava/lang/String;", ACC_PRIVATE)
                            .default_ctor(ACC_PUBLIC)
                            .build();
    ClassUnit demo = demo_class(P + "/UnusedSerialDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Ticket").astore(0);
      write_object_shape(cb, 0, 1);
      return cb.vreturn().build();
    }(), 4, 2);
    c.classes = {ticket, archive, demo};
    c.truth = Truth{}
                  .rc(P, "Ticket").rc(P, "UnusedSerialDemo")
                  .bc(P, "Archive")
                  .methods_absent()
                  .rf("Ticket", "id")
                  .bf("Archive", "contents")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
