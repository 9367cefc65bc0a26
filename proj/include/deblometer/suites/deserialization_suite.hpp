// Deserialization feature suite: a standard round-trip through the built-in
// object streams and a readObject override that only the deserialization
// machinery invokes.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec deserialization_suite() {
  using namespace bench;
  const std::string P = "Deserialization";
  SuiteSpec suite;
  suite.feature = Feature::Deserialization;
  suite.package = P;

  // Case 1: serialize then deserialize, then call a getter on the result.
  {
    CaseSpec c;
    c.id = "deserialization-standard";
    c.technique = "built-in stream round-trip; the getter runs on the "
                  "reconstructed instance, the reset path never does";
    ClassUnit packet =
        ClassBuilder(P + "/Packet")
            .implements("java/io/Serializable")
            .field("seq", "I", ACC_PRIVATE)
            .field("debug", "Ljava/lang/String;", ACC_PRIVATE | ACC_STATIC)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial("java/lang/Object", "<init>", "()V")
                        .aload(0)
                        .iconst(1)
                        .putfield(P + "/Packet", "seq", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("getSeq", "()I", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Packet", "seq", "I")
                        .ireturn()
                        .build(),
                    1, 1)
            .method("reset", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(0)
                        .putfield(P + "/Packet", "seq", "I")
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
                      construct(cb, P + "/Packet").astore(1);
                      write_object_shape(cb, 1, 2);
                      read_object_shape(cb, 3);
                      cb.checkcast(P + "/Packet")
                          .invokevirtual(P + "/Packet", "getSeq", "()I")
                          .pop();
                      call_runs(cb, P, {"OverrideDeserDemo"});
                      return cb.vreturn().build();
                    }(),
                    4, 4)
            .build();
    c.classes = {main, packet};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Packet")
                  .rm("Main", "main", "void", "String[]")
                  .rm("Packet", "getSeq", "int")
                  .bm("Packet", "reset", "void")
                  .rf("Packet", "seq")
                  .bf("Packet", "debug")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: private readObject hook, invoked only by the stream machinery.
  {
    CaseSpec c;
    c.id = "deserialization-readobject-override";
    c.technique = "readObject override restores state during deserialization; "
                  "no direct call site exists anywhere";
    ClassUnit session =
        ClassBuilder(P + "/Session")
            .implements("java/io/Serializable")
            .field("token", "Ljava/lang/String;", ACC_PRIVATE)
            .field("scratch", "Ljava/lang/String;", ACC_PRIVATE | ACC_STATIC)
            .default_ctor(ACC_PUBLIC)
            .method("readObject", "(Ljava/io/ObjectInputStream;)V",
                    ACC_PRIVATE,
                    CodeBuilder{}
                        .aload(1)
                        .invokevirtual("java/io/ObjectInputStream",
                                       "defaultReadObject", "()V")
                        .aload(0)
                        .ldc_string("restored")
                        .putfield(P + "/Session", "token", "Ljava/lang/String;")
                        .vreturn()
                        .build(),
                    2, 2)
            .method("invalidate", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .getstatic(P + "/Session", "scratch",
                                   "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/OverrideDeserDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Session").astore(0);
      write_object_shape(cb, 0, 1);
      read_object_shape(cb, 2);
      cb.checkcast(P + "/Session").pop();
      return cb.vreturn().build();
    }(), 4, 4);
    c.classes = {session, demo};
    c.truth = Truth{}
                  .rc(P, "Session").rc(P, "OverrideDeserDemo")
                  .rm("OverrideDeserDemo", "run", "void")
                  .rm("Session", "readObject", "void", "ObjectInputStream")
                  .bm("Session", "invalidate", "void")
                  .rf("Session", "token")
                  .bf("Session", "scratch")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
