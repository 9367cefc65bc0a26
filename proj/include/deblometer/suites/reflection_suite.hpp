// Reflection feature suite. Target classes are statically constructed or
// referenced, but every evaluated member is reached only through
// getDeclaredMethod / getDeclaredField string lookups. Driver logic lives in
// constructors and the suite main's static initializer, all of which stay
// outside ground-truth accounting, so the method-level required set consists
// purely of reflective targets.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

namespace bench_detail {

// new Probe() dispatch for the suite <clinit>.
inline void construct_and_pop(CodeBuilder& cb, const std::string& binary) {
  bench::construct(cb, binary).pop();
}

// getDeclaredField(name).get(obj) shape on a freshly loaded class constant.
inline CodeBuilder& reflective_field_read(CodeBuilder& cb,
                                          const std::string& owner,
                                          const std::string& field_name,
                                          unsigned obj_slot) {
  return cb.ldc_class(owner)
      .ldc_string(field_name)
      .invokevirtual("java/lang/Class", "getDeclaredField",
                     "(Ljava/lang/String;)Ljava/lang/reflect/Field;")
      .aload(obj_slot)
      .invokevirtual("java/lang/reflect/Field", "get",
                     "(Ljava/lang/Object;)Ljava/lang/Object;")
      .pop();
}

}  // namespace bench_detail

inline bench::SuiteSpec reflection_suite() {
  using namespace bench;
  const std::string P = "Reflection";
  SuiteSpec suite;
  suite.feature = Feature::Reflection;
  suite.package = P;

  auto probe_class = [&](const std::string& simple,
                         std::vector<Instruction> init_logic, u2 stack = 8,
                         u2 locals = 8) {
    CodeBuilder cb;
    cb.aload(0).invokespecial("java/lang/Object", "<init>", "()V");
    std::vector<Instruction> body = cb.build();
    for (auto& inst : init_logic) body.push_back(std::move(inst));
    body.push_back({op::return_, std::monostate{}});
    return ClassBuilder(P + "/" + simple)
        .method("<init>", "()V", ACC_PUBLIC, std::move(body), stack, locals)
        .build();
  };

  // Case 1: access-control check via name equality before the invoke.
  {
    CaseSpec c;
    c.id = "reflection-name-equality";
    c.technique = "declared method is located by comparing its name string "
                  "and invoked reflectively";
    ClassUnit vault =
        ClassBuilder(P + "/Vault")
            .field("sealed", "Z", ACC_PRIVATE)
            .field("alarm", "Z", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("unlock", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(1)
                        .putfield(P + "/Vault", "sealed", "Z")
                        .vreturn()
                        .build(),
                    2, 1)
            .method("lockdown", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Vault", "alarm", "Z")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit probe = probe_class("VaultProbe", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Vault").astore(1);
      cb.ldc_string("unlock")
          .ldc_string("unlock")
          .invokevirtual("java/lang/String", "equals", "(Ljava/lang/Object;)Z")
          .pop();
      reflective_invoke_shape(cb, 1, "unlock");
      return cb.build();
    }());
    c.classes = {probe, vault};
    c.truth = Truth{}
                  .rc(P, "VaultProbe").rc(P, "Vault")
                  .rm("Vault", "unlock", "void")
                  .bm("Vault", "lockdown", "void")
                  .rf("Vault", "sealed")
                  .bf("Vault", "alarm")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: enum constants retrieved via getDeclaredFields; one enum method
  // found and invoked by name.
  {
    CaseSpec c;
    c.id = "reflection-enum-constants";
    c.technique = "enum constant fields are enumerated reflectively; the "
                  "describe method is invoked by name";
    std::string rank = P + "/Rank";
    std::string rank_desc = "L" + rank + ";";
    ClassUnit rank_enum =
        ClassBuilder(rank, ACC_PUBLIC | ACC_SUPER | ACC_FINAL | ACC_ENUM,
                     "java/lang/Enum")
            .field("GOLD", rank_desc,
                   ACC_PUBLIC | ACC_STATIC | ACC_FINAL | ACC_ENUM)
            .field("SILVER", rank_desc,
                   ACC_PUBLIC | ACC_STATIC | ACC_FINAL | ACC_ENUM)
            .field("history", "Ljava/lang/String;", ACC_PRIVATE | ACC_STATIC)
            .method("<init>", "(Ljava/lang/String;I)V", ACC_PRIVATE,
                    CodeBuilder{}
                        .aload(0)
                        .aload(1)
                        .iload(2)
                        .invokespecial("java/lang/Enum", "<init>",
                                       "(Ljava/lang/String;I)V")
                        .vreturn()
                        .build(),
                    3, 3)
            .method("<clinit>", "()V", ACC_STATIC,
                    CodeBuilder{}
                        .new_(rank)
                        .dup()
                        .ldc_string("GOLD")
                        .iconst(0)
                        .invokespecial(rank, "<init>", "(Ljava/lang/String;I)V")
                        .putstatic(rank, "GOLD", rank_desc)
                        .new_(rank)
                        .dup()
                        .ldc_string("SILVER")
                        .iconst(1)
                        .invokespecial(rank, "<init>", "(Ljava/lang/String;I)V")
                        .putstatic(rank, "SILVER", rank_desc)
                        .vreturn()
                        .build(),
                    4, 0)
            .method("describe", "()Ljava/lang/String;", ACC_PUBLIC,
                    CodeBuilder{}.ldc_string("rank").areturn().build(), 1, 1)
            .method("retire", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .getstatic(rank, "history", "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit probe = probe_class("EnumProbe", [&] {
      CodeBuilder cb;
      cb.ldc_class(rank)
          .invokevirtual("java/lang/Class", "getDeclaredFields",
                         "()[Ljava/lang/reflect/Field;")
          .pop();
      cb.ldc_class(rank)
          .ldc_string("describe")
          .iconst(0)
          .anewarray("java/lang/Class")
          .invokevirtual("java/lang/Class", "getDeclaredMethod",
                         "(Ljava/lang/String;[Ljava/lang/Class;)"
                         "Ljava/lang/reflect/Method;")
          .plain(op::aconst_null)
          .plain(op::aconst_null)
          .invokevirtual("java/lang/reflect/Method", "invoke",
                         "(Ljava/lang/Object;[Ljava/lang/Object;)"
                         "Ljava/lang/Object;")
          .pop();
      return cb.build();
    }());
    c.classes = {probe, rank_enum};
    c.truth = Truth{}
                  .rc(P, "EnumProbe").rc(P, "Rank")
                  .rm("Rank", "describe", "String")
                  .bm("Rank", "retire", "void")
                  .rf("Rank", "GOLD")
                  .rf("Rank", "SILVER")
                  .bf("Rank", "history")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: inheritance-aware introspection with getMethod on the subclass.
  {
    CaseSpec c;
    c.id = "reflection-inheritance-aware";
    c.technique = "getMethod walks the superclass chain to find the "
                  "inherited target";
    ClassUnit base =
        ClassBuilder(P + "/BaseTool")
            .field("uses", "I", ACC_PROTECTED)
            .field("wear", "I", ACC_PROTECTED)
            .default_ctor(ACC_PUBLIC)
            .method("shared", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/BaseTool", "uses", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/BaseTool", "uses", "I")
                        .vreturn()
                        .build(),
                    3, 1)
            .method("retool", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(0)
                        .putfield(P + "/BaseTool", "wear", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit drill =
        ClassBuilder(P + "/DrillTool", ACC_PUBLIC | ACC_SUPER, P + "/BaseTool")
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/BaseTool", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("spin", "()V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 1)
            .build();
    ClassUnit probe = probe_class("ToolProbe", [&] {
      CodeBuilder cb;
      construct(cb, P + "/DrillTool").astore(1);
      cb.aload(1)
          .invokevirtual("java/lang/Object", "getClass", "()Ljava/lang/Class;")
          .ldc_string("shared")
          .iconst(0)
          .anewarray("java/lang/Class")
          .invokevirtual("java/lang/Class", "getMethod",
                         "(Ljava/lang/String;[Ljava/lang/Class;)"
                         "Ljava/lang/reflect/Method;")
          .aload(1)
          .plain(op::aconst_null)
          .invokevirtual("java/lang/reflect/Method", "invoke",
                         "(Ljava/lang/Object;[Ljava/lang/Object;)"
                         "Ljava/lang/Object;")
          .pop();
      return cb.build();
    }());
    c.classes = {probe, base, drill};
    c.truth = Truth{}
                  .rc(P, "ToolProbe").rc(P, "BaseTool").rc(P, "DrillTool")
                  .rm("BaseTool", "shared", "void")
                  .bm("BaseTool", "retool", "void")
                  .bm("DrillTool", "spin", "void")
                  .rf("BaseTool", "uses")
                  .bf("BaseTool", "wear")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: member retrieval -- a field read and a method invoke by name.
  {
    CaseSpec c;
    c.id = "reflection-member-retrieval";
    c.technique = "getDeclaredField and getDeclaredMethod fetch one member "
                  "each; their twins stay cold";
    ClassUnit profile =
        ClassBuilder(P + "/Profile")
            .field("name", "Ljava/lang/String;", ACC_PRIVATE)
            .field("visits", "I", ACC_PRIVATE)
            .field("notes", "Ljava/lang/String;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("touch", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/Profile", "visits", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/Profile", "visits", "I")
                        .vreturn()
                        .build(),
                    3, 1)
            .method("purge", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Profile", "notes", "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit probe = probe_class("MemberProbe", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Profile").astore(1);
      bench_detail::reflective_field_read(cb, P + "/Profile", "name", 1);
      reflective_invoke_shape(cb, 1, "touch");
      return cb.build();
    }());
    c.classes = {probe, profile};
    c.truth = Truth{}
                  .rc(P, "MemberProbe").rc(P, "Profile")
                  .rm("Profile", "touch", "void")
                  .bm("Profile", "purge", "void")
                  .rf("Profile", "name")
                  .rf("Profile", "visits")
                  .bf("Profile", "notes")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 5: method inspection via an enum type.
  {
    CaseSpec c;
    c.id = "reflection-enum-method-inspection";
    c.technique = "declared methods of an enum are listed and the execute "
                  "target is picked by name";
    std::string cmd = P + "/Command";
    std::string cmd_desc = "L" + cmd + ";";
    ClassUnit command =
        ClassBuilder(cmd, ACC_PUBLIC | ACC_SUPER | ACC_FINAL | ACC_ENUM,
                     "java/lang/Enum")
            .field("RUN", cmd_desc, ACC_PUBLIC | ACC_STATIC | ACC_FINAL | ACC_ENUM)
            .field("HALT", cmd_desc, ACC_PUBLIC | ACC_STATIC | ACC_FINAL | ACC_ENUM)
            .field("log", "Ljava/lang/String;", ACC_PRIVATE | ACC_STATIC)
            .method("<init>", "(Ljava/lang/String;I)V", ACC_PRIVATE,
                    CodeBuilder{}
                        .aload(0)
                        .aload(1)
                        .iload(2)
                        .invokespecial("java/lang/Enum", "<init>",
                                       "(Ljava/lang/String;I)V")
                        .vreturn()
                        .build(),
                    3, 3)
            .method("<clinit>", "()V", ACC_STATIC,
                    CodeBuilder{}
                        .new_(cmd)
                        .dup()
                        .ldc_string("RUN")
                        .iconst(0)
                        .invokespecial(cmd, "<init>", "(Ljava/lang/String;I)V")
                        .putstatic(cmd, "RUN", cmd_desc)
                        .new_(cmd)
                        .dup()
                        .ldc_string("HALT")
                        .iconst(1)
                        .invokespecial(cmd, "<init>", "(Ljava/lang/String;I)V")
                        .putstatic(cmd, "HALT", cmd_desc)
                        .vreturn()
                        .build(),
                    4, 0)
            .method("execute", "()V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 1)
            .method("cancel", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .getstatic(cmd, "log", "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit probe = probe_class("CommandProbe", [&] {
      CodeBuilder cb;
      cb.ldc_class(cmd)
          .invokevirtual("java/lang/Class", "getDeclaredMethods",
                         "()[Ljava/lang/reflect/Method;")
          .pop();
      cb.ldc_class(cmd)
          .ldc_string("execute")
          .iconst(0)
          .anewarray("java/lang/Class")
          .invokevirtual("java/lang/Class", "getDeclaredMethod",
                         "(Ljava/lang/String;[Ljava/lang/Class;)"
                         "Ljava/lang/reflect/Method;")
          .getstatic(cmd, "RUN", cmd_desc)
          .plain(op::aconst_null)
          .invokevirtual("java/lang/reflect/Method", "invoke",
                         "(Ljava/lang/Object;[Ljava/lang/Object;)"
                         "Ljava/lang/Object;")
          .pop();
      return cb.build();
    }());
    c.classes = {probe, command};
    c.truth = Truth{}
                  .rc(P, "CommandProbe").rc(P, "Command")
                  .rm("Command", "execute", "void")
                  .bm("Command", "cancel", "void")
                  .rf("Command", "RUN")
                  .rf("Command", "HALT")
                  .bf("Command", "log")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 6: standard iteration over declared fields and methods.
  {
    CaseSpec c;
    c.id = "reflection-member-iteration";
    c.technique = "declared fields and methods are iterated; poll is invoked "
                  "by name and two fields are read through Field objects";
    ClassUnit sensor =
        ClassBuilder(P + "/Sensor")
            .field("reading", "I", ACC_PRIVATE)
            .field("offset", "I", ACC_PRIVATE)
            .field("raw", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("poll", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/Sensor", "reading", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/Sensor", "reading", "I")
                        .vreturn()
                        .build(),
                    3, 1)
            .method("calibrate", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(0)
                        .putfield(P + "/Sensor", "raw", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit probe = probe_class("SensorProbe", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Sensor").astore(1);
      cb.ldc_class(P + "/Sensor")
          .invokevirtual("java/lang/Class", "getDeclaredFields",
                         "()[Ljava/lang/reflect/Field;")
          .pop();
      cb.ldc_class(P + "/Sensor")
          .invokevirtual("java/lang/Class", "getDeclaredMethods",
                         "()[Ljava/lang/reflect/Method;")
          .pop();
      bench_detail::reflective_field_read(cb, P + "/Sensor", "offset", 1);
      reflective_invoke_shape(cb, 1, "poll");
      return cb.build();
    }());
    c.classes = {probe, sensor};
    c.truth = Truth{}
                  .rc(P, "SensorProbe").rc(P, "Sensor")
                  .rm("Sensor", "poll", "void")
                  .bm("Sensor", "calibrate", "void")
                  .rf("Sensor", "reading")
                  .rf("Sensor", "offset")
                  .bf("Sensor", "raw")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // The suite main: a static initializer instantiates every probe. It has
  // no main method, so it contributes a class-level construct only.
  {
    CodeBuilder cb;
    for (const char* probe :
         {"VaultProbe", "EnumProbe", "ToolProbe", "MemberProbe",
          "CommandProbe", "SensorProbe"})
      bench_detail::construct_and_pop(cb, P + "/" + std::string(probe));
    ClassUnit main = ClassBuilder(P + "/Main")
                         .default_ctor(ACC_PUBLIC)
                         .method("<clinit>", "()V", ACC_STATIC,
                                 cb.vreturn().build(), 2, 0)
                         .build();
    suite.cases[0].classes.insert(suite.cases[0].classes.begin(),
                                  std::move(main));
    suite.cases[0].truth.classes.required.insert(ConstructRef::cls(P, "Main"));
  }

  suite.seeds = {
      ConstructRef::method("Vault", "unlock", "void", {}),
      ConstructRef::method("Rank", "describe", "String", {}),
      ConstructRef::method("BaseTool", "shared", "void", {}),
      ConstructRef::method("Profile", "touch", "void", {}),
      ConstructRef::method("Command", "execute", "void", {}),
      ConstructRef::method("Sensor", "poll", "void", {}),
      ConstructRef::field("Profile", "name"),
      ConstructRef::field("Sensor", "offset"),
  };
  return suite;
}

}  // namespace deblometer::suites
