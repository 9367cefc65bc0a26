// Abstract-class feature suite: anonymous classes, non-abstract subclasses,
// explicit implementations on the abstract class, an unused hierarchy,
// partial implementations and invocations not declared on the abstract type.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec abstract_suite() {
  using namespace bench;
  const std::string P = "Abstract";
  SuiteSpec suite;
  suite.feature = Feature::Abstract;
  suite.package = P;

  // Case 1: anonymous subclass of an abstract class; only engine() runs.
  // The suite main doubles as this case's driver.
  {
    CaseSpec c;
    c.id = "abstract-anonymous-class";
    c.technique =
        "anonymous class overriding two abstract methods; one override and "
        "one inherited field are exercised, their twins stay bloated";
    ClassUnit car =
        ClassBuilder(P + "/Car", ACC_SUPER | ACC_ABSTRACT)
            .source_file("Main.java")
            .field("piston", "I", 0)
            .field("material", "Ljava/lang/String;", 0)
            .method("<init>", "()V", 0,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial("java/lang/Object", "<init>", "()V")
                        .aload(0)
                        .iconst(4)
                        .putfield(P + "/Car", "piston", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .abstract_method("engine", "()V")
            .abstract_method("material", "()V")
            .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .source_file("Main.java")
            .inner_class(P + "/Main$1", std::nullopt, std::nullopt, 0)
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/Main$1").astore(1);
                      cb.aload(1).invokevirtual(P + "/Car", "engine", "()V");
                      call_runs(cb, P,
                                {"SubclassDemo", "ShapeDemo", "UnusedDemo",
                                 "ReaderDemo", "TaskDemo"});
                      return cb.vreturn().build();
                    }(),
                    2, 2)
            .build();
    ClassUnit anon =
        ClassBuilder(P + "/Main$1", ACC_SUPER, P + "/Car")
            .source_file("Main.java")
            .inner_class(P + "/Main$1", std::nullopt, std::nullopt, 0)
            .method("<init>", "()V", 0,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Car", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("engine", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .getstatic("java/lang/System", "out",
                                   "Ljava/io/PrintStream;")
                        .aload(0)
                        .getfield(P + "/Car", "piston", "I")
                        .invokevirtual("java/io/PrintStream", "println", "(I)V")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("material", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .getstatic("java/lang/System", "out",
                                   "Ljava/io/PrintStream;")
                        .aload(0)
                        .getfield(P + "/Car", "material", "Ljava/lang/String;")
                        .invokevirtual("java/io/PrintStream", "println",
                                       "(Ljava/lang/String;)V")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    c.classes = {main, car, anon};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Car").rc(P, "Main$1")
                  .rm("Main", "main", "void", "String[]")
                  .rm("Main$1", "engine", "void")
                  .bm("Car", "engine", "void")
                  .bm("Car", "material", "void")
                  .bm("Main$1", "material", "void")
                  .rf("Car", "piston")
                  .bf("Car", "material")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: plain non-abstract subclass; the abstract declaration and an
  // unrelated concrete method on the base stay bloated.
  {
    CaseSpec c;
    c.id = "abstract-non-abstract-subclass";
    c.technique = "named subclass implements the abstract method; the base "
                  "also carries a concrete helper nobody calls";
    ClassUnit vehicle = ClassBuilder(P + "/Vehicle", ACC_SUPER | ACC_ABSTRACT)
                            .field("speed", "I", ACC_PROTECTED)
                            .default_ctor()
                            .abstract_method("move", "()V")
                            .method("stop", "()V", ACC_PUBLIC,
                                    CodeBuilder{}
                                        .aload(0)
                                        .iconst(0)
                                        .putfield(P + "/Vehicle", "speed", "I")
                                        .vreturn()
                                        .build(),
                                    2, 1)
                            .build();
    ClassUnit truck =
        ClassBuilder(P + "/Truck", ACC_PUBLIC | ACC_SUPER, P + "/Vehicle")
            .field("cargo", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Vehicle", "<init>", "()V")
                        .aload(0)
                        .iconst(3)
                        .putfield(P + "/Truck", "cargo", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("move", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Truck", "cargo", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .method("horn", "()V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 1)
            .build();
    ClassUnit demo = demo_class(P + "/SubclassDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Truck").astore(0);
      return cb.aload(0).invokevirtual(P + "/Vehicle", "move", "()V").vreturn().build();
    }());
    c.classes = {vehicle, truck, demo};
    c.truth = Truth{}
                  .rc(P, "Vehicle").rc(P, "Truck").rc(P, "SubclassDemo")
                  .rm("SubclassDemo", "run", "void")
                  .rm("Truck", "move", "void")
                  .bm("Vehicle", "move", "void")
                  .bm("Vehicle", "stop", "void")
                  .bm("Truck", "horn", "void")
                  .rf("Truck", "cargo")
                  .bf("Vehicle", "speed")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: concrete method declared on the abstract class itself.
  {
    CaseSpec c;
    c.id = "abstract-explicit-implementation";
    c.technique = "abstract base with one concrete method invoked through the "
                  "base type plus an abstract method dispatched to the subclass";
    ClassUnit shape =
        ClassBuilder(P + "/Shape", ACC_SUPER | ACC_ABSTRACT)
            .field("label", "Ljava/lang/String;", ACC_PROTECTED)
            .default_ctor()
            .abstract_method("area", "()I")
            .method("describe", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .getstatic("java/lang/System", "out",
                                   "Ljava/io/PrintStream;")
                        .ldc_string("shape")
                        .invokevirtual("java/io/PrintStream", "println",
                                       "(Ljava/lang/String;)V")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit square =
        ClassBuilder(P + "/Square", ACC_PUBLIC | ACC_SUPER, P + "/Shape")
            .field("side", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Shape", "<init>", "()V")
                        .aload(0)
                        .iconst(2)
                        .putfield(P + "/Square", "side", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("area", "()I", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Square", "side", "I")
                        .dup()
                        .plain(op::imul)
                        .ireturn()
                        .build(),
                    2, 1)
            .method("scale", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Shape", "label", "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/ShapeDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Square").astore(0);
      cb.aload(0).invokevirtual(P + "/Shape", "describe", "()V");
      cb.aload(0).invokevirtual(P + "/Shape", "area", "()I").pop();
      return cb.vreturn().build();
    }());
    c.classes = {shape, square, demo};
    c.truth = Truth{}
                  .rc(P, "Shape").rc(P, "Square").rc(P, "ShapeDemo")
                  .rm("ShapeDemo", "run", "void")
                  .rm("Shape", "describe", "void")
                  .rm("Square", "area", "int")
                  .bm("Shape", "area", "int")
                  .bm("Square", "scale", "void")
                  .rf("Square", "side")
                  .bf("Shape", "label")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: an abstract hierarchy nobody touches.
  {
    CaseSpec c;
    c.id = "abstract-unused-hierarchy";
    c.technique = "abstract class and its subclass are never instantiated or "
                  "referenced; the whole hierarchy is bloated";
    ClassUnit motor = ClassBuilder(P + "/Motor", ACC_SUPER | ACC_ABSTRACT)
                          .default_ctor()
                          .abstract_method("ignite", "()V")
                          .build();
    ClassUnit diesel =
        ClassBuilder(P + "/DieselMotor", ACC_PUBLIC | ACC_SUPER, P + "/Motor")
            .field("fuel", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Motor", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("ignite", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/DieselMotor", "fuel", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/UnusedDemo",
                                CodeBuilder{}
                                    .getstatic("java/lang/System", "out",
                                               "Ljava/io/PrintStream;")
                                    .ldc_string("nothing abstract here")
                                    .invokevirtual("java/io/PrintStream",
                                                   "println",
                                                   "(Ljava/lang/String;)V")
                                    .vreturn()
                                    .build());
    c.classes = {motor, diesel, demo};
    c.truth = Truth{}
                  .rc(P, "UnusedDemo")
                  .bc(P, "Motor").bc(P, "DieselMotor")
                  .rm("UnusedDemo", "run", "void")
                  .bm("Motor", "ignite", "void")
                  .bm("DieselMotor", "ignite", "void")
                  .bf("DieselMotor", "fuel")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 5: template method on the base calls the abstract hook.
  {
    CaseSpec c;
    c.id = "abstract-partial-implementation";
    c.technique = "concrete base method drives an abstract hook implemented "
                  "by the subclass; an unused reset path stays bloated";
    ClassUnit reader =
        ClassBuilder(P + "/Reader", ACC_SUPER | ACC_ABSTRACT)
            .field("buffer", "Ljava/lang/String;", ACC_PROTECTED)
            .default_ctor()
            .abstract_method("parse", "()V")
            .method("read", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokevirtual(P + "/Reader", "parse", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit csv =
        ClassBuilder(P + "/CsvReader", ACC_PUBLIC | ACC_SUPER, P + "/Reader")
            .field("rows", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Reader", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("parse", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/CsvReader", "rows", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/CsvReader", "rows", "I")
                        .vreturn()
                        .build(),
                    3, 1)
            .method("reset", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(0)
                        .putfield(P + "/CsvReader", "rows", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit demo = demo_class(P + "/ReaderDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/CsvReader").astore(0);
      return cb.aload(0).invokevirtual(P + "/Reader", "read", "()V").vreturn().build();
    }());
    c.classes = {reader, csv, demo};
    c.truth = Truth{}
                  .rc(P, "Reader").rc(P, "CsvReader").rc(P, "ReaderDemo")
                  .rm("ReaderDemo", "run", "void")
                  .rm("Reader", "read", "void")
                  .rm("CsvReader", "parse", "void")
                  .bm("Reader", "parse", "void")
                  .bm("CsvReader", "reset", "void")
                  .rf("CsvReader", "rows")
                  .bf("Reader", "buffer")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 6: subclass method that the abstract type does not declare.
  {
    CaseSpec c;
    c.id = "abstract-unrelated-invocation";
    c.technique = "call targets a subclass-only method; the abstract contract "
                  "methods and a sibling subclass stay bloated";
    ClassUnit task = ClassBuilder(P + "/Task", ACC_SUPER | ACC_ABSTRACT)
                         .default_ctor()
                         .abstract_method("execute", "()V")
                         .build();
    ClassUnit clean =
        ClassBuilder(P + "/CleanTask", ACC_PUBLIC | ACC_SUPER, P + "/Task")
            .field("count", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Task", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("execute", "()V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 1)
            .method("log", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/CleanTask", "count", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/CleanTask", "count", "I")
                        .vreturn()
                        .build(),
                    3, 1)
            .build();
    ClassUnit paused =
        ClassBuilder(P + "/PausedTask", ACC_PUBLIC | ACC_SUPER, P + "/Task")
            .field("delay", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Task", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("execute", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/PausedTask", "delay", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/TaskDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/CleanTask").astore(0);
      return cb.aload(0).invokevirtual(P + "/CleanTask", "log", "()V").vreturn().build();
    }());
    c.classes = {task, clean, paused, demo};
    c.truth = Truth{}
                  .rc(P, "Task").rc(P, "CleanTask").rc(P, "TaskDemo")
                  .bc(P, "PausedTask")
                  .rm("TaskDemo", "run", "void")
                  .rm("CleanTask", "log", "void")
                  .bm("Task", "execute", "void")
                  .bm("CleanTask", "execute", "void")
                  .bm("PausedTask", "execute", "void")
                  .rf("CleanTask", "count")
                  .bf("PausedTask", "delay")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
