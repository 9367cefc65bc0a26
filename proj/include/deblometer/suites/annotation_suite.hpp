// Annotation feature suite: conditional presence of custom annotations on
// classes, methods and fields; a functional annotation that steers
// execution; redundant annotations; and an annotation member method.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec annotation_suite() {
  using namespace bench;
  const std::string P = "Annotation";
  SuiteSpec suite;
  suite.feature = Feature::Annotation;
  suite.package = P;

  auto desc = [&](const char* simple) {
    return annotation_descriptor(P + "/" + simple);
  };

  // Case 1: class-level annotations; one is read at runtime, its twin only
  // decorates. The suite main doubles as this case's driver.
  {
    CaseSpec c;
    c.id = "annotation-class-presence";
    c.technique = "two marker annotations on one class; the checked one is "
                  "required, the never-read one is bloated";
    ClassUnit tracked = annotation_type(P + "/Tracked");
    ClassUnit legacy = annotation_type(P + "/Legacy");
    ClassUnit payload = ClassBuilder(P + "/Payload")
                            .annotate(desc("Tracked"))
                            .annotate(desc("Legacy"))
                            .field("id", "I", ACC_PRIVATE)
                            .field("cache", "Ljava/lang/String;", ACC_PRIVATE)
                            .default_ctor(ACC_PUBLIC)
                            .method("describe", "()V", ACC_PUBLIC,
                                    CodeBuilder{}
                                        .aload(0)
                                        .getfield(P + "/Payload", "cache",
                                                  "Ljava/lang/String;")
                                        .pop()
                                        .vreturn()
                                        .build(),
                                    1, 1)
                            .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/Payload").astore(1);
                      cb.aload(1).getfield(P + "/Payload", "id", "I").pop();
                      annotation_check_shape(cb, P + "/Payload", P + "/Tracked");
                      call_runs(cb, P,
                                {"MethodAnnDemo", "FieldAnnDemo", "FuncAnnDemo",
                                 "RedundantDemo", "MemberAnnDemo",
                                 "MixedAnnDemo"});
                      return cb.vreturn().build();
                    }(),
                    2, 2)
            .build();
    c.classes = {main, tracked, legacy, payload};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Tracked").rc(P, "Payload")
                  .bc(P, "Legacy")
                  .rm("Main", "main", "void", "String[]")
                  .bm("Payload", "describe", "void")
                  .rf("Payload", "id")
                  .bf("Payload", "cache")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: method-level annotations.
  {
    CaseSpec c;
    c.id = "annotation-method-presence";
    c.technique = "annotated method is invoked and its annotation read; a "
                  "draft-annotated method is never called";
    ClassUnit checked = annotation_type(P + "/Checked");
    ClassUnit draft = annotation_type(P + "/Draft");
    ClassUnit service =
        ClassBuilder(P + "/Service")
            .field("state", "I", ACC_PRIVATE)
            .field("temp", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("process", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(1)
                        .putfield(P + "/Service", "state", "I")
                        .vreturn()
                        .build(),
                    2, 1, {marker_annotation(desc("Checked"))})
            .method("skip", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(0)
                        .putfield(P + "/Service", "temp", "I")
                        .vreturn()
                        .build(),
                    2, 1, {marker_annotation(desc("Draft"))})
            .build();
    ClassUnit demo = demo_class(P + "/MethodAnnDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Service").astore(0);
      cb.aload(0).invokevirtual(P + "/Service", "process", "()V");
      annotation_check_shape(cb, P + "/Service", P + "/Checked");
      return cb.vreturn().build();
    }());
    c.classes = {checked, draft, service, demo};
    c.truth = Truth{}
                  .rc(P, "Checked").rc(P, "Service").rc(P, "MethodAnnDemo")
                  .bc(P, "Draft")
                  .rm("MethodAnnDemo", "run", "void")
                  .rm("Service", "process", "void")
                  .bm("Service", "skip", "void")
                  .rf("Service", "state")
                  .bf("Service", "temp")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: field-level annotations.
  {
    CaseSpec c;
    c.id = "annotation-field-presence";
    c.technique = "annotated field is read at runtime; a cached twin field "
                  "and its annotation are dead weight";
    ClassUnit persistent = annotation_type(P + "/Persistent");
    ClassUnit cached = annotation_type(P + "/Cached");
    ClassUnit record =
        ClassBuilder(P + "/Record")
            .field("key", "Ljava/lang/String;", ACC_PRIVATE,
                   {marker_annotation(desc("Persistent"))})
            .field("blob", "[B", ACC_PRIVATE,
                   {marker_annotation(desc("Cached"))})
            .default_ctor(ACC_PUBLIC)
            .method("clear", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .plain(op::aconst_null)
                        .putfield(P + "/Record", "blob", "[B")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit demo = demo_class(P + "/FieldAnnDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Record").astore(0);
      cb.aload(0).getfield(P + "/Record", "key", "Ljava/lang/String;").pop();
      annotation_check_shape(cb, P + "/Record", P + "/Persistent");
      return cb.vreturn().build();
    }());
    c.classes = {persistent, cached, record, demo};
    c.truth = Truth{}
                  .rc(P, "Persistent").rc(P, "Record").rc(P, "FieldAnnDemo")
                  .bc(P, "Cached")
                  .rm("FieldAnnDemo", "run", "void")
                  .bm("Record", "clear", "void")
                  .rf("Record", "key")
                  .bf("Record", "blob")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: a functional annotation that decides which path runs. Both
  // branch targets are statically reachable, so the unexecuted one is a
  // precision trap for static tools.
  {
    CaseSpec c;
    c.id = "annotation-functional";
    c.technique = "presence check branches between fast and slow paths; only "
                  "the fast path ever executes";
    ClassUnit enabled = annotation_type(P + "/Enabled");
    ClassUnit worker =
        ClassBuilder(P + "/Worker")
            .annotate(desc("Enabled"))
            .field("hits", "I", ACC_PRIVATE | ACC_STATIC)
            .field("misses", "I", ACC_PRIVATE | ACC_STATIC)
            .default_ctor(ACC_PUBLIC)
            .method("fast", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .getstatic(P + "/Worker", "hits", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putstatic(P + "/Worker", "hits", "I")
                        .vreturn()
                        .build(),
                    2, 0)
            .method("slow", "()V", ACC_PUBLIC | ACC_STATIC,
                    CodeBuilder{}
                        .getstatic(P + "/Worker", "misses", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putstatic(P + "/Worker", "misses", "I")
                        .vreturn()
                        .build(),
                    2, 0)
            .build();
    // isAnnotationPresent() ? fast() : slow()
    ClassUnit demo = demo_class(P + "/FuncAnnDemo",
                                CodeBuilder{}
                                    .ldc_class(P + "/Worker")
                                    .ldc_class(P + "/Enabled")
                                    .invokevirtual("java/lang/Class",
                                                   "isAnnotationPresent",
                                                   "(Ljava/lang/Class;)Z")
                                    .branch(op::ifeq, 9)
                                    .invokestatic(P + "/Worker", "fast", "()V")
                                    .branch(op::goto_, 6)
                                    .invokestatic(P + "/Worker", "slow", "()V")
                                    .vreturn()
                                    .build(),
                                2, 0);
    c.classes = {enabled, worker, demo};
    c.truth = Truth{}
                  .rc(P, "Enabled").rc(P, "Worker").rc(P, "FuncAnnDemo")
                  .rm("FuncAnnDemo", "run", "void")
                  .rm("Worker", "fast", "void")
                  .bm("Worker", "slow", "void")
                  .rf("Worker", "hits")
                  .bf("Worker", "misses")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 5: redundant annotation, never consulted.
  {
    CaseSpec c;
    c.id = "annotation-redundant";
    c.technique = "marker annotation on a live class is never inspected; "
                  "removing it cannot change behavior";
    ClassUnit redundant = annotation_type(P + "/Redundant");
    ClassUnit config =
        ClassBuilder(P + "/Config")
            .annotate(desc("Redundant"))
            .field("path", "Ljava/lang/String;", ACC_PRIVATE)
            .field("backup", "Ljava/lang/String;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("load", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Config", "path", "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .method("reset", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Config", "backup",
                                  "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/RedundantDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Config").astore(0);
      return cb.aload(0).invokevirtual(P + "/Config", "load", "()V").vreturn().build();
    }());
    c.classes = {redundant, config, demo};
    c.truth = Truth{}
                  .rc(P, "Config").rc(P, "RedundantDemo")
                  .bc(P, "Redundant")
                  .rm("RedundantDemo", "run", "void")
                  .rm("Config", "load", "void")
                  .bm("Config", "reset", "void")
                  .rf("Config", "path")
                  .bf("Config", "backup")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 6: annotation member method; the member is never executed.
  {
    CaseSpec c;
    c.id = "annotation-member-method";
    c.technique = "valued annotation contributes a member method to the "
                  "inventory; nothing ever calls value()";
    ClassUnit level = annotation_type_with_value(P + "/Level");
    Annotation level3{desc("Level"),
                      {{"value", ElementValue{'I', LoadableConst{3}}}}};
    ClassUnit gauge =
        ClassBuilder(P + "/Gauge")
            .annotate_with(level3)
            .field("reading", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("measure", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Gauge", "reading", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .method("calibrate", "()V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 1)
            .build();
    ClassUnit demo = demo_class(P + "/MemberAnnDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Gauge").astore(0);
      return cb.aload(0).invokevirtual(P + "/Gauge", "measure", "()V").vreturn().build();
    }());
    c.classes = {level, gauge, demo};
    c.truth = Truth{}
                  .rc(P, "Gauge").rc(P, "MemberAnnDemo")
                  .bc(P, "Level")
                  .rm("MemberAnnDemo", "run", "void")
                  .rm("Gauge", "measure", "void")
                  .bm("Level", "value", "int")
                  .bm("Gauge", "calibrate", "void")
                  .rf("Gauge", "reading")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 7: one annotation across all three construct kinds.
  {
    CaseSpec c;
    c.id = "annotation-mixed-targets";
    c.technique = "audited class/method/field trio is exercised and checked; "
                  "a trace twin decorates the same constructs unread";
    ClassUnit audit = annotation_type(P + "/Audit");
    ClassUnit trace = annotation_type(P + "/Trace");
    ClassUnit ledger =
        ClassBuilder(P + "/Ledger")
            .annotate(desc("Audit"))
            .annotate(desc("Trace"))
            .field("total", "I", ACC_PRIVATE, {marker_annotation(desc("Audit"))})
            .field("draft", "I", ACC_PRIVATE, {marker_annotation(desc("Trace"))})
            .default_ctor(ACC_PUBLIC)
            .method("post", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/Ledger", "total", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/Ledger", "total", "I")
                        .vreturn()
                        .build(),
                    3, 1, {marker_annotation(desc("Audit"))})
            .method("voidEntry", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(0)
                        .putfield(P + "/Ledger", "draft", "I")
                        .vreturn()
                        .build(),
                    2, 1, {marker_annotation(desc("Trace"))})
            .build();
    ClassUnit demo = demo_class(P + "/MixedAnnDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Ledger").astore(0);
      cb.aload(0).invokevirtual(P + "/Ledger", "post", "()V");
      annotation_check_shape(cb, P + "/Ledger", P + "/Audit");
      return cb.vreturn().build();
    }());
    c.classes = {audit, trace, ledger, demo};
    c.truth = Truth{}
                  .rc(P, "Audit").rc(P, "Ledger").rc(P, "MixedAnnDemo")
                  .bc(P, "Trace")
                  .rm("MixedAnnDemo", "run", "void")
                  .rm("Ledger", "post", "void")
                  .bm("Ledger", "voidEntry", "void")
                  .rf("Ledger", "total")
                  .bf("Ledger", "draft")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
