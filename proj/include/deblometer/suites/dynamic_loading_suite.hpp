// Dynamic class loading feature suite. The loaded targets are named only by
// string constants and used through a platform interface, so no static pool
// reference from reachable code ever names them. All driver logic lives in
// the suite main's static initializer, which stays outside ground-truth
// accounting; the suite main therefore contributes a class-level construct
// only.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec dynamic_loading_suite() {
  using namespace bench;
  const std::string P = "DynamicLoading";
  SuiteSpec suite;
  suite.feature = Feature::DynamicClassLoading;
  suite.package = P;

  // Case 1: ClassLoader.loadClass on a string name.
  {
    CaseSpec c;
    c.id = "dynamic-class-loading-loadclass";
    c.technique = "system class loader loads the implementation by name; the "
                  "instance runs through java.lang.Runnable";
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method(
                "<clinit>", "()V", ACC_STATIC,
                CodeBuilder{}
                    // new ClassLoader().loadClass("...PluginImpl")
                    //     .newInstance() -> Runnable -> run()
                    .invokestatic("java/lang/ClassLoader",
                                  "getSystemClassLoader",
                                  "()Ljava/lang/ClassLoader;")
                    .ldc_string("DynamicLoading.PluginImpl")
                    .invokevirtual("java/lang/ClassLoader", "loadClass",
                                   "(Ljava/lang/String;)Ljava/lang/Class;")
                    .invokevirtual("java/lang/Class", "newInstance",
                                   "()Ljava/lang/Object;")
                    .checkcast("java/lang/Runnable")
                    .invokeinterface("java/lang/Runnable", "run", "()V")
                    // Class.forName("...RemoteTask").newInstance() -> run()
                    .ldc_string("DynamicLoading.RemoteTask")
                    .invokestatic("java/lang/Class", "forName",
                                  "(Ljava/lang/String;)Ljava/lang/Class;")
                    .invokevirtual("java/lang/Class", "newInstance",
                                   "()Ljava/lang/Object;")
                    .checkcast("java/lang/Runnable")
                    .invokeinterface("java/lang/Runnable", "run", "()V")
                    .vreturn()
                    .build(),
                2, 0)
            .build();
    ClassUnit plugin =
        ClassBuilder(P + "/PluginImpl")
            .implements("java/lang/Runnable")
            .field("active", "Z", ACC_PRIVATE)
            .field("tag", "Ljava/lang/String;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("run", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(1)
                        .putfield(P + "/PluginImpl", "active", "Z")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("shutdown", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/PluginImpl", "tag",
                                  "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit stale =
        ClassBuilder(P + "/StalePlugin")
            .implements("java/lang/Runnable")
            .field("level", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("run", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/StalePlugin", "level", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    c.classes = {main, plugin, stale};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "PluginImpl")
                  .bc(P, "StalePlugin")
                  .rm("PluginImpl", "run", "void")
                  .bm("PluginImpl", "shutdown", "void")
                  .bm("StalePlugin", "run", "void")
                  .rf("PluginImpl", "active")
                  .bf("PluginImpl", "tag")
                  .bf("StalePlugin", "level")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: Class.forName on a string name (driven from the same <clinit>).
  {
    CaseSpec c;
    c.id = "dynamic-class-loading-forname";
    c.technique = "reflective instantiation from a class-name string; the "
                  "retry path and a ghost task never load";
    ClassUnit remote =
        ClassBuilder(P + "/RemoteTask")
            .implements("java/lang/Runnable")
            .field("attempts", "I", ACC_PRIVATE)
            .field("limit", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("run", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/RemoteTask", "attempts", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/RemoteTask", "attempts", "I")
                        .vreturn()
                        .build(),
                    3, 1)
            .method("retry", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/RemoteTask", "limit", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit ghost =
        ClassBuilder(P + "/GhostTask")
            .implements("java/lang/Runnable")
            .field("note", "Ljava/lang/String;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("run", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/GhostTask", "note",
                                  "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    c.classes = {remote, ghost};
    c.truth = Truth{}
                  .rc(P, "RemoteTask")
                  .bc(P, "GhostTask")
                  .rm("RemoteTask", "run", "void")
                  .bm("RemoteTask", "retry", "void")
                  .bm("GhostTask", "run", "void")
                  .rf("RemoteTask", "attempts")
                  .bf("RemoteTask", "limit")
                  .bf("GhostTask", "note")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  suite.seeds = {
      ConstructRef::cls(P, "PluginImpl"),
      ConstructRef::cls(P, "RemoteTask"),
      ConstructRef::method("PluginImpl", "run", "void", {}),
      ConstructRef::method("RemoteTask", "run", "void", {}),
  };
  return suite;
}

}  // namespace deblometer::suites
