// Interface feature suite: standard implementation, an anonymous
// implementation, interface composition through a sub-interface, and a
// functional interface implemented by a lambda.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec interface_suite() {
  using namespace bench;
  const std::string P = "Interface";
  SuiteSpec suite;
  suite.feature = Feature::Interface;
  suite.package = P;

  // Case 1: plain implementation invoked through the interface (suite main).
  {
    CaseSpec c;
    c.id = "interface-standard-implementation";
    c.technique = "interface call dispatches to the only implementation; the "
                  "mute path stays silent";
    ClassUnit greeter = ClassBuilder(P + "/Greeter",
                                     ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
                            .abstract_method("greet", "()V")
                            .build();
    ClassUnit console =
        ClassBuilder(P + "/ConsoleGreeter")
            .implements(P + "/Greeter")
            .field("prefix", "Ljava/lang/String;", ACC_PRIVATE)
            .field("volume", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial("java/lang/Object", "<init>", "()V")
                        .aload(0)
                        .ldc_string("hello")
                        .putfield(P + "/ConsoleGreeter", "prefix",
                                  "Ljava/lang/String;")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("greet", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .getstatic("java/lang/System", "out",
                                   "Ljava/io/PrintStream;")
                        .aload(0)
                        .getfield(P + "/ConsoleGreeter", "prefix",
                                  "Ljava/lang/String;")
                        .invokevirtual("java/io/PrintStream", "println",
                                       "(Ljava/lang/String;)V")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("mute", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(0)
                        .putfield(P + "/ConsoleGreeter", "volume", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/ConsoleGreeter").astore(1);
                      cb.aload(1).invokeinterface(P + "/Greeter", "greet",
                                                  "()V");
                      call_runs(cb, P, {"AnonImplDemo", "CompositionDemo",
                                        "FunctionalDemo"});
                      return cb.vreturn().build();
                    }(),
                    2, 2)
            .build();
    c.classes = {main, greeter, console};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Greeter").rc(P, "ConsoleGreeter")
                  .rm("Main", "main", "void", "String[]")
                  .rm("ConsoleGreeter", "greet", "void")
                  .bm("Greeter", "greet", "void")
                  .bm("ConsoleGreeter", "mute", "void")
                  .rf("ConsoleGreeter", "prefix")
                  .bf("ConsoleGreeter", "volume")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: anonymous implementation; a named twin never loads.
  {
    CaseSpec c;
    c.id = "interface-anonymous-implementation";
    c.technique = "anonymous class implements the handler; a quiet named "
                  "implementation exists but is never referenced";
    ClassUnit handler = ClassBuilder(P + "/Handler",
                                     ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
                            .abstract_method("handle", "()V")
                            .build();
    ClassUnit demo =
        ClassBuilder(P + "/AnonImplDemo")
            .inner_class(P + "/AnonImplDemo$1", std::nullopt, std::nullopt, 0)
            .field("taps", "I", ACC_STATIC)
            .default_ctor(ACC_PUBLIC)
            .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/AnonImplDemo$1").astore(0);
                      cb.aload(0).invokeinterface(P + "/Handler", "handle",
                                                  "()V");
                      return cb.vreturn().build();
                    }(),
                    2, 1)
            .build();
    ClassUnit anon =
        ClassBuilder(P + "/AnonImplDemo$1", ACC_SUPER)
            .implements(P + "/Handler")
            .inner_class(P + "/AnonImplDemo$1", std::nullopt, std::nullopt, 0)
            .method("<init>", "()V", 0,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial("java/lang/Object", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("handle", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .getstatic(P + "/AnonImplDemo", "taps", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putstatic(P + "/AnonImplDemo", "taps", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit quiet =
        ClassBuilder(P + "/QuietHandler")
            .implements(P + "/Handler")
            .field("depth", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("handle", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/QuietHandler", "depth", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    c.classes = {handler, demo, anon, quiet};
    c.truth = Truth{}
                  .rc(P, "Handler").rc(P, "AnonImplDemo").rc(P, "AnonImplDemo$1")
                  .bc(P, "QuietHandler")
                  .rm("AnonImplDemo", "run", "void")
                  .rm("AnonImplDemo$1", "handle", "void")
                  .bm("Handler", "handle", "void")
                  .bm("QuietHandler", "handle", "void")
                  .rf("AnonImplDemo", "taps")
                  .bf("QuietHandler", "depth")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: composed sub-interface combining two behaviors.
  {
    CaseSpec c;
    c.id = "interface-composition";
    c.technique = "sub-interface extends two parents; calls through the "
                  "composed view reach one implementation";
    ClassUnit fetcher = ClassBuilder(P + "/Fetcher",
                                     ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
                            .abstract_method("fetch", "()V")
                            .build();
    ClassUnit storer = ClassBuilder(P + "/Storer",
                                    ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
                           .abstract_method("store", "()V")
                           .build();
    ClassUnit codec = ClassBuilder(P + "/Codec",
                                   ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
                          .implements(P + "/Fetcher")
                          .implements(P + "/Storer")
                          .build();
    ClassUnit file_codec =
        ClassBuilder(P + "/FileCodec")
            .implements(P + "/Codec")
            .field("mode", "I", ACC_PRIVATE)
            .field("tmp", "Ljava/lang/String;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("fetch", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/FileCodec", "mode", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .method("store", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(2)
                        .putfield(P + "/FileCodec", "mode", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("flush", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/FileCodec", "tmp", "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/CompositionDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/FileCodec").astore(0);
      cb.aload(0).invokeinterface(P + "/Codec", "fetch", "()V");
      cb.aload(0).invokeinterface(P + "/Codec", "store", "()V");
      return cb.vreturn().build();
    }());
    c.classes = {fetcher, storer, codec, file_codec, demo};
    c.truth = Truth{}
                  .rc(P, "Fetcher").rc(P, "Storer").rc(P, "Codec")
                  .rc(P, "FileCodec").rc(P, "CompositionDemo")
                  .rm("CompositionDemo", "run", "void")
                  .rm("FileCodec", "fetch", "void")
                  .rm("FileCodec", "store", "void")
                  .bm("Fetcher", "fetch", "void")
                  .bm("Storer", "store", "void")
                  .bm("FileCodec", "flush", "void")
                  .rf("FileCodec", "mode")
                  .bf("FileCodec", "tmp")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: functional interface implemented by a lambda.
  {
    CaseSpec c;
    c.id = "interface-functional-lambda";
    c.technique = "metafactory call site links the lambda body; the named "
                  "fallback path never runs";
    ClassUnit transform =
        ClassBuilder(P + "/Transform",
                     ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
            .annotate("Ljava/lang/FunctionalInterface;")
            .abstract_method("apply", "()V")
            .build();
    ClassUnit demo =
        ClassBuilder(P + "/FunctionalDemo")
            .field("calls", "I", ACC_STATIC)
            .field("unused", "I", ACC_STATIC)
            .default_ctor(ACC_PUBLIC)
            .bootstrap_method(lambda_bootstrap(
                "()V",
                MemberRefData{P + "/FunctionalDemo", "lambda$run$0", "()V"}))
            .method("run", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .invokedynamic(0, "apply", "()L" + P + "/Transform;")
                        .astore(0)
                        .aload(0)
                        .invokeinterface(P + "/Transform", "apply", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("lambda$run$0", "()V",
                    ACC_PRIVATE | ACC_STATIC | ACC_SYNTHETIC,
                    CodeBuilder{}
                        .getstatic(P + "/FunctionalDemo", "calls", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putstatic(P + "/FunctionalDemo", "calls", "I")
                        .vreturn()
                        .build(),
                    2, 0)
            .method("fallback", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .getstatic(P + "/FunctionalDemo", "unused", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 0)
            .build();
    c.classes = {transform, demo};
    c.truth = Truth{}
                  .rc(P, "Transform").rc(P, "FunctionalDemo")
                  .rm("FunctionalDemo", "run", "void")
                  .rm("FunctionalDemo", "lambda$run$0", "void")
                  .bm("Transform", "apply", "void")
                  .bm("FunctionalDemo", "fallback", "void")
                  .rf("FunctionalDemo", "calls")
                  .bf("FunctionalDemo", "unused")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
