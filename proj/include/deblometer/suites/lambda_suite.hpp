// Lambda feature suite: metafactory-linked bodies that call into classes,
// mutate fields, implement inline logic, and one lambda that is created but
// never invoked. Functional interfaces carry runtime-visible annotations.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

namespace bench_detail {

inline ClassUnit functional_interface(const std::string& binary,
                                      const char* method,
                                      const char* descriptor) {
  using namespace bench;
  return ClassBuilder(binary, ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
      .annotate("Ljava/lang/FunctionalInterface;")
      .abstract_method(method, descriptor)
      .build();
}

}  // namespace bench_detail

inline bench::SuiteSpec lambda_suite() {
  using namespace bench;
  const std::string P = "Lambda";
  SuiteSpec suite;
  suite.feature = Feature::Lambda;
  suite.package = P;

  // Case 1: lambda body calls into a class (suite main drives).
  {
    CaseSpec c;
    c.id = "lambda-class-interaction";
    c.technique = "lambda body delegates to a static class method; the drop "
                  "path never executes";
    ClassUnit action = bench_detail::functional_interface(P + "/Action", "go", "()V");
    ClassUnit counter =
        ClassBuilder(P + "/Counter")
            .field("n", "I", ACC_STATIC)
            .field("max", "I", ACC_STATIC)
            .default_ctor(ACC_PUBLIC)
            .method("bump", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .getstatic(P + "/Counter", "n", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putstatic(P + "/Counter", "n", "I")
                        .vreturn()
                        .build(),
                    2, 0)
            .method("drop", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .getstatic(P + "/Counter", "max", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 0)
            .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .bootstrap_method(lambda_bootstrap(
                "()V", MemberRefData{P + "/Main", "lambda$main$0", "()V"}))
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      cb.invokedynamic(0, "go", "()L" + P + "/Action;")
                          .astore(1)
                          .aload(1)
                          .invokeinterface(P + "/Action", "go", "()V");
                      call_runs(cb, P, {"FieldLambdaDemo", "InlineLambdaDemo",
                                        "UnusedLambdaDemo"});
                      return cb.vreturn().build();
                    }(),
                    1, 2)
            .method("lambda$main$0", "()V",
                    ACC_PRIVATE | ACC_STATIC | ACC_SYNTHETIC,
                    CodeBuilder{}
                        .invokestatic(P + "/Counter", "bump", "()V")
                        .vreturn()
                        .build(),
                    0, 0)
            .build();
    c.classes = {main, action, counter};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Action").rc(P, "Counter")
                  .rm("Main", "main", "void", "String[]")
                  .rm("Main", "lambda$main$0", "void")
                  .rm("Counter", "bump", "void")
                  .bm("Action", "go", "void")
                  .bm("Counter", "drop", "void")
                  .rf("Counter", "n")
                  .bf("Counter", "max")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: lambda mutates a field in its enclosing class.
  {
    CaseSpec c;
    c.id = "lambda-field-mutation";
    c.technique = "lambda body writes a static field of its declaring class; "
                  "the reset path never runs";
    ClassUnit mutator =
        bench_detail::functional_interface(P + "/Mutator", "mutate", "()V");
    ClassUnit demo =
        ClassBuilder(P + "/FieldLambdaDemo")
            .field("total", "I", ACC_STATIC)
            .field("floor", "I", ACC_STATIC)
            .default_ctor(ACC_PUBLIC)
            .bootstrap_method(lambda_bootstrap(
                "()V",
                MemberRefData{P + "/FieldLambdaDemo", "lambda$run$0", "()V"}))
            .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .invokedynamic(0, "mutate", "()L" + P + "/Mutator;")
                        .astore(0)
                        .aload(0)
                        .invokeinterface(P + "/Mutator", "mutate", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("lambda$run$0", "()V",
                    ACC_PRIVATE | ACC_STATIC | ACC_SYNTHETIC,
                    CodeBuilder{}
                        .getstatic(P + "/FieldLambdaDemo", "total", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putstatic(P + "/FieldLambdaDemo", "total", "I")
                        .vreturn()
                        .build(),
                    2, 0)
            .method("reset", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .iconst(0)
                        .putstatic(P + "/FieldLambdaDemo", "floor", "I")
                        .vreturn()
                        .build(),
                    1, 0)
            .build();
    c.classes = {mutator, demo};
    c.truth = Truth{}
                  .rc(P, "Mutator").rc(P, "FieldLambdaDemo")
                  .rm("FieldLambdaDemo", "run", "void")
                  .rm("FieldLambdaDemo", "lambda$run$0", "void")
                  .bm("Mutator", "mutate", "void")
                  .bm("FieldLambdaDemo", "reset", "void")
                  .rf("FieldLambdaDemo", "total")
                  .bf("FieldLambdaDemo", "floor")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: pure inline logic in the lambda body.
  {
    CaseSpec c;
    c.id = "lambda-inline-logic";
    c.technique = "lambda computes a value inline; the result is stored and "
                  "the slow path ignored";
    ClassUnit calc = bench_detail::functional_interface(P + "/Calc", "eval", "()I");
    ClassUnit demo =
        ClassBuilder(P + "/InlineLambdaDemo")
            .field("last", "I", ACC_STATIC)
            .field("cache", "I", ACC_STATIC)
            .default_ctor(ACC_PUBLIC)
            .bootstrap_method(lambda_bootstrap(
                "()I",
                MemberRefData{P + "/InlineLambdaDemo", "lambda$run$0", "()I"}))
            .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .invokedynamic(0, "eval", "()L" + P + "/Calc;")
                        .astore(0)
                        .aload(0)
                        .invokeinterface(P + "/Calc", "eval", "()I")
                        .putstatic(P + "/InlineLambdaDemo", "last", "I")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("lambda$run$0", "()I",
                    ACC_PRIVATE | ACC_STATIC | ACC_SYNTHETIC,
                    CodeBuilder{}
                        .iconst(5)
                        .raw(op::bipush, {7})
                        .plain(op::imul)
                        .ireturn()
                        .build(),
                    2, 0)
            .method("slowPath", "()I", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .getstatic(P + "/InlineLambdaDemo", "cache", "I")
                        .ireturn()
                        .build(),
                    1, 0)
            .build();
    c.classes = {calc, demo};
    c.truth = Truth{}
                  .rc(P, "Calc").rc(P, "InlineLambdaDemo")
                  .rm("InlineLambdaDemo", "run", "void")
                  .rm("InlineLambdaDemo", "lambda$run$0", "int")
                  .bm("Calc", "eval", "int")
                  .bm("InlineLambdaDemo", "slowPath", "int")
                  .rf("InlineLambdaDemo", "last")
                  .bf("InlineLambdaDemo", "cache")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: the lambda object is created but its method never invoked, so
  // the linked body is bloated even though the call site references it.
  {
    CaseSpec c;
    c.id = "lambda-created-unused";
    c.technique = "metafactory call site links a body that never executes; "
                  "conservative keep rules retain it as a false positive";
    ClassUnit idle = bench_detail::functional_interface(P + "/Idle", "act", "()V");
    ClassUnit demo =
        ClassBuilder(P + "/UnusedLambdaDemo")
            .field("ticks", "I", ACC_STATIC)
            .field("slack", "I", ACC_STATIC)
            .default_ctor(ACC_PUBLIC)
            .bootstrap_method(lambda_bootstrap(
                "()V",
                MemberRefData{P + "/UnusedLambdaDemo", "lambda$run$0", "()V"}))
            .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .invokedynamic(0, "act", "()L" + P + "/Idle;")
                        .pop()
                        .getstatic(P + "/UnusedLambdaDemo", "ticks", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putstatic(P + "/UnusedLambdaDemo", "ticks", "I")
                        .vreturn()
                        .build(),
                    2, 0)
            .method("lambda$run$0", "()V",
                    ACC_PRIVATE | ACC_STATIC | ACC_SYNTHETIC,
                    CodeBuilder{}
                        .getstatic(P + "/UnusedLambdaDemo", "slack", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 0)
            .method("skip", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}.vreturn().build(), 0, 0)
            .build();
    c.classes = {idle, demo};
    c.truth = Truth{}
                  .rc(P, "Idle").rc(P, "UnusedLambdaDemo")
                  .rm("UnusedLambdaDemo", "run", "void")
                  .bm("Idle", "act", "void")
                  .bm("UnusedLambdaDemo", "lambda$run$0", "void")
                  .bm("UnusedLambdaDemo", "skip", "void")
                  .rf("UnusedLambdaDemo", "ticks")
                  .bf("UnusedLambdaDemo", "slack")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
