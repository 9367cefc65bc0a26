// Shared hand-built fixtures for the unit suites: the anonymous-class
// test case (Car / Main / Main$1) as a standalone JAR.
#pragma once

#include "deblometer/assembler.hpp"
#include "deblometer/ground_truth.hpp"
#include "deblometer/jar.hpp"

namespace deblometer::testfx {

inline JarArchive anon_case_jar() {
  ClassUnit car =
      ClassBuilder("Abstract/Car", ACC_SUPER | ACC_ABSTRACT)
          .source_file("Main.java")
          .field("piston", "I", 0)
          .field("material", "Ljava/lang/String;", 0)
          .method("<init>", "()V", 0,
                  CodeBuilder{}
                      .aload(0)
                      .invokespecial("java/lang/Object", "<init>", "()V")
                      .aload(0)
                      .iconst(4)
                      .putfield("Abstract/Car", "piston", "I")
                      .vreturn()
                      .build(),
                  2, 1)
          .abstract_method("engine", "()V")
          .abstract_method("material", "()V")
          .build();
  ClassUnit main =
      ClassBuilder("Abstract/Main")
          .source_file("Main.java")
          .inner_class("Abstract/Main$1", std::nullopt, std::nullopt, 0)
          .default_ctor(ACC_PUBLIC)
          .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                  CodeBuilder{}
                      .new_("Abstract/Main$1")
                      .dup()
                      .invokespecial("Abstract/Main$1", "<init>", "()V")
                      .astore(1)
                      .aload(1)
                      .invokevirtual("Abstract/Car", "engine", "()V")
                      .vreturn()
                      .build(),
                  2, 2)
          .build();
  ClassUnit anon =
      ClassBuilder("Abstract/Main$1", ACC_SUPER, "Abstract/Car")
          .source_file("Main.java")
          .inner_class("Abstract/Main$1", std::nullopt, std::nullopt, 0)
          .method("<init>", "()V", 0,
                  CodeBuilder{}
                      .aload(0)
                      .invokespecial("Abstract/Car", "<init>", "()V")
                      .vreturn()
                      .build(),
                  1, 1)
          .method("engine", "()V", ACC_PUBLIC,
                  CodeBuilder{}
                      .getstatic("java/lang/System", "out", "Ljava/io/PrintStream;")
                      .aload(0)
                      .getfield("Abstract/Car", "piston", "I")
                      .invokevirtual("java/io/PrintStream", "println", "(I)V")
                      .vreturn()
                      .build(),
                  2, 1)
          .method("material", "()V", ACC_PUBLIC,
                  CodeBuilder{}
                      .getstatic("java/lang/System", "out", "Ljava/io/PrintStream;")
                      .aload(0)
                      .getfield("Abstract/Car", "material", "Ljava/lang/String;")
                      .invokevirtual("java/io/PrintStream", "println",
                                     "(Ljava/lang/String;)V")
                      .vreturn()
                      .build(),
                  2, 1)
          .build();
  JarArchive jar;
  jar.manifest.set("Manifest-Version", "1.0");
  jar.manifest.set("Main-Class", "Abstract.Main");
  jar.add("Abstract/Car.class", emit_class(car));
  jar.add("Abstract/Main.class", emit_class(main));
  jar.add("Abstract/Main$1.class", emit_class(anon));
  return jar;
}

inline GroundTruth anon_case_truth() {
  GroundTruth gt;
  gt.classes.required = {ConstructRef::cls("Abstract", "Main"),
                         ConstructRef::cls("Abstract", "Car"),
                         ConstructRef::cls("Abstract", "Main$1")};
  gt.methods.required = {
      ConstructRef::method("Main", "main", "void", {"String[]"}),
      ConstructRef::method("Main$1", "engine", "void", {})};
  gt.methods.bloated = {ConstructRef::method("Car", "engine", "void", {}),
                        ConstructRef::method("Car", "material", "void", {}),
                        ConstructRef::method("Main$1", "material", "void", {})};
  gt.fields.required = {ConstructRef::field("Car", "piston")};
  gt.fields.bloated = {ConstructRef::field("Car", "material")};
  return gt;
}

}  // namespace deblometer::testfx
