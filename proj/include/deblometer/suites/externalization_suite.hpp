// Externalization feature suite: Externalizable types must declare both
// readExternal and writeExternal, so each focused case leaves the unused
// half bloated -- a precision trap for lifecycle-preserving policies.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec externalization_suite() {
  using namespace bench;
  const std::string P = "Externalization";
  SuiteSpec suite;
  suite.feature = Feature::Externalization;
  suite.package = P;

  // Case 1: write-focused; only writeExternal runs (suite main drives).
  {
    CaseSpec c;
    c.id = "externalization-write-only";
    c.technique = "snapshot is externalized to a stream; readExternal exists "
                  "only to satisfy the interface";
    ClassUnit snapshot =
        ClassBuilder(P + "/Snapshot")
            .implements("java/io/Externalizable")
            .field("state", "I", ACC_PRIVATE)
            .field("spare", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial("java/lang/Object", "<init>", "()V")
                        .aload(0)
                        .iconst(5)
                        .putfield(P + "/Snapshot", "state", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("writeExternal", "(Ljava/io/ObjectOutput;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(1)
                        .aload(0)
                        .getfield(P + "/Snapshot", "state", "I")
                        .invokeinterface("java/io/ObjectOutput", "writeInt",
                                         "(I)V")
                        .vreturn()
                        .build(),
                    2, 2)
            .method("readExternal", "(Ljava/io/ObjectInput;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(1)
                        .invokeinterface("java/io/ObjectInput", "readInt",
                                         "()I")
                        .putfield(P + "/Snapshot", "spare", "I")
                        .vreturn()
                        .build(),
                    2, 2)
            .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/Snapshot").astore(1);
                      write_object_shape(cb, 1, 2);
                      call_runs(cb, P, {"ReadExtDemo"});
                      return cb.vreturn().build();
                    }(),
                    4, 3)
            .build();
    c.classes = {main, snapshot};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Snapshot")
                  .rm("Main", "main", "void", "String[]")
                  .rm("Snapshot", "writeExternal", "void", "ObjectOutput")
                  .bm("Snapshot", "readExternal", "void", "ObjectInput")
                  .rf("Snapshot", "state")
                  .bf("Snapshot", "spare")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: read-focused; writeExternal never runs. A cold externalizable
  // class rides along entirely unused.
  {
    CaseSpec c;
    c.id = "externalization-read-only";
    c.technique = "instance is reconstructed from a prepared stream; the "
                  "write half and a cold store class stay bloated";
    ClassUnit restore =
        ClassBuilder(P + "/Restore")
            .implements("java/io/Externalizable")
            .field("value", "Ljava/lang/String;", ACC_PRIVATE)
            .field("stale", "Ljava/lang/String;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("readExternal", "(Ljava/io/ObjectInput;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(1)
                        .invokeinterface("java/io/ObjectInput", "readUTF",
                                         "()Ljava/lang/String;")
                        .putfield(P + "/Restore", "value",
                                  "Ljava/lang/String;")
                        .vreturn()
                        .build(),
                    2, 2)
            .method("writeExternal", "(Ljava/io/ObjectOutput;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(1)
                        .aload(0)
                        .getfield(P + "/Restore", "stale", "Ljava/lang/String;")
                        .invokeinterface("java/io/ObjectOutput", "writeUTF",
                                         "(Ljava/lang/String;)V")
                        .vreturn()
                        .build(),
                    2, 2)
            .build();
    ClassUnit cold =
        ClassBuilder(P + "/ColdStore")
            .implements("java/io/Externalizable")
            .field("blob", "Ljava/lang/String;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("readExternal", "(Ljava/io/ObjectInput;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(1)
                        .invokeinterface("java/io/ObjectInput", "readUTF",
                                         "()Ljava/lang/String;")
                        .putfield(P + "/ColdStore", "blob",
                                  "Ljava/lang/String;")
                        .vreturn()
                        .build(),
                    2, 2)
            .method("writeExternal", "(Ljava/io/ObjectOutput;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(1)
                        .aload(0)
                        .getfield(P + "/ColdStore", "blob",
                                  "Ljava/lang/String;")
                        .invokeinterface("java/io/ObjectOutput", "writeUTF",
                                         "(Ljava/lang/String;)V")
                        .vreturn()
                        .build(),
                    2, 2)
            .build();
    ClassUnit demo = demo_class(P + "/ReadExtDemo", [&] {
      CodeBuilder cb;
      read_object_shape(cb, 0);
      cb.checkcast(P + "/Restore").pop();
      return cb.vreturn().build();
    }(), 4, 2);
    c.classes = {restore, cold, demo};
    c.truth = Truth{}
                  .rc(P, "Restore").rc(P, "ReadExtDemo")
                  .bc(P, "ColdStore")
                  .rm("ReadExtDemo", "run", "void")
                  .rm("Restore", "readExternal", "void", "ObjectInput")
                  .bm("Restore", "writeExternal", "void", "ObjectOutput")
                  .bm("ColdStore", "readExternal", "void", "ObjectInput")
                  .bm("ColdStore", "writeExternal", "void", "ObjectOutput")
                  .rf("Restore", "value")
                  .bf("Restore", "stale")
                  .bf("ColdStore", "blob")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
