// Overriding feature suite: dynamic dispatch to subclass overrides, a
// polymorphic call through a superclass reference, static method hiding and
// a super-qualified invocation. No field-level evaluation for this feature.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec overriding_suite() {
  using namespace bench;
  const std::string P = "Overriding";
  SuiteSpec suite;
  suite.feature = Feature::Overriding;
  suite.package = P;

  auto noop_method = [] { return CodeBuilder{}.vreturn().build(); };

  // Case 1: standard override; the base body never executes (suite main).
  {
    CaseSpec c;
    c.id = "overriding-standard";
    c.technique = "dispatch always lands in the subclass override; the "
                  "superclass body is dead weight static analyses retain";
    ClassUnit animal = ClassBuilder(P + "/Animal")
                           .default_ctor(ACC_PUBLIC)
                           .method("speak", "()V", ACC_PUBLIC, noop_method(), 0, 1)
                           .build();
    ClassUnit dog =
        ClassBuilder(P + "/Dog", ACC_PUBLIC | ACC_SUPER, P + "/Animal")
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Animal", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("speak", "()V", ACC_PUBLIC, noop_method(), 0, 1)
            .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/Dog").astore(1);
                      cb.aload(1).invokevirtual(P + "/Animal", "speak", "()V");
                      call_runs(cb, P, {"PolyDemo", "HidingDemo", "SuperDemo"});
                      return cb.vreturn().build();
                    }(),
                    2, 2)
            .build();
    c.classes = {main, animal, dog};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Animal").rc(P, "Dog")
                  .rm("Main", "main", "void", "String[]")
                  .rm("Dog", "speak", "void")
                  .bm("Animal", "speak", "void")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: polymorphism through a superclass reference; a sibling override
  // in a never-instantiated class stays dead.
  {
    CaseSpec c;
    c.id = "overriding-polymorphic-reference";
    c.technique = "superclass-typed variable dispatches to the one "
                  "instantiated subclass; the sibling subclass never loads";
    ClassUnit figure = ClassBuilder(P + "/Figure")
                           .default_ctor(ACC_PUBLIC)
                           .method("draw", "()V", ACC_PUBLIC, noop_method(), 0, 1)
                           .build();
    ClassUnit circle =
        ClassBuilder(P + "/Circle", ACC_PUBLIC | ACC_SUPER, P + "/Figure")
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Figure", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("draw", "()V", ACC_PUBLIC, noop_method(), 0, 1)
            .build();
    ClassUnit quad =
        ClassBuilder(P + "/Quad", ACC_PUBLIC | ACC_SUPER, P + "/Figure")
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Figure", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("draw", "()V", ACC_PUBLIC, noop_method(), 0, 1)
            .build();
    ClassUnit demo = demo_class(P + "/PolyDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Circle").astore(0);
      return cb.aload(0).invokevirtual(P + "/Figure", "draw", "()V").vreturn().build();
    }());
    c.classes = {figure, circle, quad, demo};
    c.truth = Truth{}
                  .rc(P, "Figure").rc(P, "Circle").rc(P, "PolyDemo")
                  .bc(P, "Quad")
                  .rm("PolyDemo", "run", "void")
                  .rm("Circle", "draw", "void")
                  .bm("Figure", "draw", "void")
                  .bm("Quad", "draw", "void")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: static method hiding binds exactly.
  {
    CaseSpec c;
    c.id = "overriding-static-hiding";
    c.technique = "static call binds to the subclass declaration; the hidden "
                  "parent static is removable";
    ClassUnit parent =
        ClassBuilder(P + "/ParentTool")
            .default_ctor(ACC_PUBLIC)
            .method("tag", "()V", ACC_PUBLIC | ACC_STATIC, noop_method(), 0, 0)
            .build();
    ClassUnit child =
        ClassBuilder(P + "/ChildTool", ACC_PUBLIC | ACC_SUPER, P + "/ParentTool")
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/ParentTool", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("tag", "()V", ACC_PUBLIC | ACC_STATIC, noop_method(), 0, 0)
            .build();
    ClassUnit demo = demo_class(P + "/HidingDemo",
                                CodeBuilder{}
                                    .invokestatic(P + "/ChildTool", "tag", "()V")
                                    .vreturn()
                                    .build(),
                                0, 0);
    c.classes = {parent, child, demo};
    c.truth = Truth{}
                  .rc(P, "ParentTool").rc(P, "ChildTool").rc(P, "HidingDemo")
                  .rm("HidingDemo", "run", "void")
                  .rm("ChildTool", "tag", "void")
                  .bm("ParentTool", "tag", "void")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: override delegates upward with a super call; both bodies run.
  {
    CaseSpec c;
    c.id = "overriding-super-invocation";
    c.technique = "override chains to super.boot(), so base and override are "
                  "both required; unrelated helpers stay bloated";
    ClassUnit gadget =
        ClassBuilder(P + "/Gadget")
            .default_ctor(ACC_PUBLIC)
            .method("boot", "()V", ACC_PUBLIC, noop_method(), 0, 1)
            .method("shutdown", "()V", ACC_PUBLIC, noop_method(), 0, 1)
            .build();
    ClassUnit smart =
        ClassBuilder(P + "/SmartGadget", ACC_PUBLIC | ACC_SUPER, P + "/Gadget")
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Gadget", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("boot", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/Gadget", "boot", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("calibrate", "()V", ACC_PUBLIC, noop_method(), 0, 1)
            .build();
    ClassUnit demo = demo_class(P + "/SuperDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/SmartGadget").astore(0);
      return cb.aload(0).invokevirtual(P + "/Gadget", "boot", "()V").vreturn().build();
    }());
    c.classes = {gadget, smart, demo};
    c.truth = Truth{}
                  .rc(P, "Gadget").rc(P, "SmartGadget").rc(P, "SuperDemo")
                  .rm("SuperDemo", "run", "void")
                  .rm("Gadget", "boot", "void")
                  .rm("SmartGadget", "boot", "void")
                  .bm("Gadget", "shutdown", "void")
                  .bm("SmartGadget", "calibrate", "void")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
