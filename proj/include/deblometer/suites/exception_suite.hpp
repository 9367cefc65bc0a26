// Exception feature suite: custom checked exceptions (basic, with extra
// fields, in a hierarchy) and an unchecked variant. Every case throws inside
// a guarded range and interrogates the caught object.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

namespace bench_detail {

// try { throw new F(); } catch (C e) { e.<accessor>(); }  -- the accessor
// returns a String. Byte layout: new+dup+invokespecial = pc 0..6, athrow at
// pc 7, handler at pc 8.
inline std::vector<Instruction> throw_catch_body(
    const std::string& thrown, const std::string& caught,
    const std::string& accessor_owner, const std::string& accessor,
    std::vector<ExceptionHandler>& handlers_out,
    std::vector<Instruction> tail = {}) {
  using namespace bench;
  CodeBuilder cb;
  construct(cb, thrown).athrow();
  cb.astore(0)
      .aload(0)
      .invokevirtual(accessor_owner, accessor, "()Ljava/lang/String;")
      .pop();
  handlers_out = {{0, 8, 8, caught}};
  auto body = cb.build();
  for (auto& inst : tail) body.push_back(std::move(inst));
  body.push_back({op::return_, std::monostate{}});
  return body;
}

}  // namespace bench_detail

inline bench::SuiteSpec exception_suite() {
  using namespace bench;
  const std::string P = "Exception";
  SuiteSpec suite;
  suite.feature = Feature::Exception;
  suite.package = P;

  auto exception_class = [&](const std::string& simple, const std::string& super,
                             const char* req_field, const char* req_getter,
                             const char* blo_field, const char* blo_getter) {
    return ClassBuilder(P + "/" + simple, ACC_PUBLIC | ACC_SUPER, super)
        .field(req_field, "Ljava/lang/String;", ACC_PRIVATE)
        .field(blo_field, "Ljava/lang/String;", ACC_PRIVATE)
        .method("<init>", "()V", ACC_PUBLIC,
                CodeBuilder{}
                    .aload(0)
                    .invokespecial(super, "<init>", "()V")
                    .aload(0)
                    .ldc_string(simple)
                    .putfield(P + "/" + simple, req_field,
                              "Ljava/lang/String;")
                    .vreturn()
                    .build(),
                2, 1)
        .method(req_getter, "()Ljava/lang/String;", ACC_PUBLIC,
                CodeBuilder{}
                    .aload(0)
                    .getfield(P + "/" + simple, req_field,
                              "Ljava/lang/String;")
                    .areturn()
                    .build(),
                1, 1)
        .method(blo_getter, "()Ljava/lang/String;", ACC_PUBLIC,
                CodeBuilder{}
                    .aload(0)
                    .getfield(P + "/" + simple, blo_field,
                              "Ljava/lang/String;")
                    .areturn()
                    .build(),
                1, 1)
        .build();
  };

  // Case 1: basic custom exception (driven by the suite main).
  {
    CaseSpec c;
    c.id = "exception-basic-custom";
    c.technique = "custom checked exception thrown and caught; one accessor "
                  "runs in the handler, the other never does";
    ClassUnit fault = exception_class("BasicFault", "java/lang/Exception",
                                      "tag", "describe", "hint", "getHint");
    std::vector<ExceptionHandler> handlers;
    CodeBuilder tail;
    call_runs(tail, P, {"FieldFaultDemo", "HierarchyDemo", "UncheckedDemo"});
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    bench_detail::throw_catch_body(
                        P + "/BasicFault", P + "/BasicFault", P + "/BasicFault",
                        "describe", handlers, tail.build()),
                    2, 2, {}, handlers)
            .build();
    c.classes = {main, fault};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "BasicFault")
                  .rm("Main", "main", "void", "String[]")
                  .rm("BasicFault", "describe", "String")
                  .bm("BasicFault", "getHint", "String")
                  .rf("BasicFault", "tag")
                  .bf("BasicFault", "hint")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: extended custom exception with extra state.
  {
    CaseSpec c;
    c.id = "exception-extended-fields";
    c.technique = "exception carries extra fields; the handler reads one, "
                  "the code-path field is never touched";
    ClassUnit fault = exception_class("IoFault", "java/lang/Exception",
                                      "path", "getPath", "code", "getCode");
    std::vector<ExceptionHandler> handlers;
    ClassUnit demo =
        ClassBuilder(P + "/FieldFaultDemo")
            .default_ctor(ACC_PUBLIC)
            .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                    bench_detail::throw_catch_body(P + "/IoFault",
                                                   P + "/IoFault",
                                                   P + "/IoFault", "getPath",
                                                   handlers),
                    2, 1, {}, handlers)
            .build();
    c.classes = {fault, demo};
    c.truth = Truth{}
                  .rc(P, "IoFault").rc(P, "FieldFaultDemo")
                  .rm("FieldFaultDemo", "run", "void")
                  .rm("IoFault", "getPath", "String")
                  .bm("IoFault", "getCode", "String")
                  .rf("IoFault", "path")
                  .bf("IoFault", "code")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: hierarchy of custom exceptions, caught via the base type.
  {
    CaseSpec c;
    c.id = "exception-hierarchy";
    c.technique = "leaf of a three-level hierarchy is thrown and caught as "
                  "the base; the base override and a sibling stay bloated";
    ClassUnit base =
        ClassBuilder(P + "/BaseFault", ACC_PUBLIC | ACC_SUPER,
                     "java/lang/Exception")
            .default_ctor(ACC_PUBLIC)
            .method("origin", "()Ljava/lang/String;", ACC_PUBLIC,
                    CodeBuilder{}.ldc_string("base").areturn().build(), 1, 1)
            .build();
    ClassUnit mid = ClassBuilder(P + "/MidFault", ACC_PUBLIC | ACC_SUPER,
                                 P + "/BaseFault")
                        .method("<init>", "()V", ACC_PUBLIC,
                                CodeBuilder{}
                                    .aload(0)
                                    .invokespecial(P + "/BaseFault", "<init>",
                                                   "()V")
                                    .vreturn()
                                    .build(),
                                1, 1)
                        .build();
    ClassUnit leaf =
        ClassBuilder(P + "/LeafFault", ACC_PUBLIC | ACC_SUPER, P + "/MidFault")
            .field("depth", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/MidFault", "<init>", "()V")
                        .aload(0)
                        .iconst(3)
                        .putfield(P + "/LeafFault", "depth", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("origin", "()Ljava/lang/String;", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/LeafFault", "depth", "I")
                        .pop()
                        .ldc_string("leaf")
                        .areturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit side =
        ClassBuilder(P + "/SideFault", ACC_PUBLIC | ACC_SUPER, P + "/BaseFault")
            .field("cause", "Ljava/lang/String;", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/BaseFault", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("origin", "()Ljava/lang/String;", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/SideFault", "cause",
                                  "Ljava/lang/String;")
                        .areturn()
                        .build(),
                    1, 1)
            .build();
    std::vector<ExceptionHandler> handlers;
    ClassUnit demo =
        ClassBuilder(P + "/HierarchyDemo")
            .default_ctor(ACC_PUBLIC)
            .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                    bench_detail::throw_catch_body(P + "/LeafFault",
                                                   P + "/BaseFault",
                                                   P + "/BaseFault", "origin",
                                                   handlers),
                    2, 1, {}, handlers)
            .build();
    c.classes = {base, mid, leaf, side, demo};
    c.truth = Truth{}
                  .rc(P, "BaseFault").rc(P, "MidFault").rc(P, "LeafFault")
                  .rc(P, "HierarchyDemo")
                  .bc(P, "SideFault")
                  .rm("HierarchyDemo", "run", "void")
                  .rm("LeafFault", "origin", "String")
                  .bm("BaseFault", "origin", "String")
                  .bm("SideFault", "origin", "String")
                  .rf("LeafFault", "depth")
                  .bf("SideFault", "cause")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: unchecked custom exception.
  {
    CaseSpec c;
    c.id = "exception-unchecked";
    c.technique = "runtime-exception subclass thrown without a throws "
                  "contract; the suppress path stays cold";
    ClassUnit fault = exception_class("LimitFault", "java/lang/RuntimeException",
                                      "reason", "getReason", "spare",
                                      "suppress");
    std::vector<ExceptionHandler> handlers;
    ClassUnit demo =
        ClassBuilder(P + "/UncheckedDemo")
            .default_ctor(ACC_PUBLIC)
            .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                    bench_detail::throw_catch_body(P + "/LimitFault",
                                                   P + "/LimitFault",
                                                   P + "/LimitFault",
                                                   "getReason", handlers),
                    2, 1, {}, handlers)
            .build();
    c.classes = {fault, demo};
    c.truth = Truth{}
                  .rc(P, "LimitFault").rc(P, "UncheckedDemo")
                  .rm("UncheckedDemo", "run", "void")
                  .rm("LimitFault", "getReason", "String")
                  .bm("LimitFault", "suppress", "String")
                  .rf("LimitFault", "reason")
                  .bf("LimitFault", "spare")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
