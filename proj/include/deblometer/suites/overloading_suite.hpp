// Overloading feature suite: same-name methods distinguished by parameter
// lists. The field level is not evaluated for this feature, so the classes
// declare none.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec overloading_suite() {
  using namespace bench;
  const std::string P = "Overloading";
  SuiteSpec suite;
  suite.feature = Feature::Overloading;
  suite.package = P;

  // Case 1: arity selects the overload (suite main drives).
  {
    CaseSpec c;
    c.id = "overloading-argument-count";
    c.technique = "zero-argument form is called; one- and two-argument "
                  "overloads stay unused";
    ClassUnit mixer =
        ClassBuilder(P + "/Mixer")
            .default_ctor(ACC_PUBLIC)
            .method("mix", "()V", ACC_PUBLIC, CodeBuilder{}.vreturn().build(), 0, 1)
            .method("mix", "(I)V", ACC_PUBLIC, CodeBuilder{}.vreturn().build(), 0, 2)
            .method("mix", "(II)V", ACC_PUBLIC, CodeBuilder{}.vreturn().build(), 0, 3)
            .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/Mixer").astore(1);
                      cb.aload(1).invokevirtual(P + "/Mixer", "mix", "()V");
                      call_runs(cb, P,
                                {"BindingDemo", "ParamTypeDemo", "SwapDemo",
                                 "PriorityDemo", "PromotionDemo"});
                      return cb.vreturn().build();
                    }(),
                    2, 2)
            .build();
    c.classes = {main, mixer};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Mixer")
                  .rm("Main", "main", "void", "String[]")
                  .rm("Mixer", "mix", "void")
                  .bm("Mixer", "mix", "void", "int")
                  .bm("Mixer", "mix", "void", "int,int")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: compile-time binding on the static argument type.
  {
    CaseSpec c;
    c.id = "overloading-compile-time-binding";
    c.technique = "String argument binds the String overload at compile "
                  "time; the Object overload never resolves";
    ClassUnit painter =
        ClassBuilder(P + "/Painter")
            .default_ctor(ACC_PUBLIC)
            .method("paint", "(Ljava/lang/String;)V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 2)
            .method("paint", "(Ljava/lang/Object;)V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 2)
            .build();
    ClassUnit demo = demo_class(P + "/BindingDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Painter").astore(0);
      return cb.aload(0)
          .ldc_string("red")
          .invokevirtual(P + "/Painter", "paint", "(Ljava/lang/String;)V")
          .vreturn()
          .build();
    }());
    c.classes = {painter, demo};
    c.truth = Truth{}
                  .rc(P, "Painter").rc(P, "BindingDemo")
                  .rm("BindingDemo", "run", "void")
                  .rm("Painter", "paint", "void", "String")
                  .bm("Painter", "paint", "void", "Object")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: parameter type selects the overload.
  {
    CaseSpec c;
    c.id = "overloading-parameter-types";
    c.technique = "int overload is exercised; float and String variants are "
                  "never selected";
    ClassUnit sorter =
        ClassBuilder(P + "/Sorter")
            .default_ctor(ACC_PUBLIC)
            .method("sort", "(I)V", ACC_PUBLIC, CodeBuilder{}.vreturn().build(), 0, 2)
            .method("sort", "(F)V", ACC_PUBLIC, CodeBuilder{}.vreturn().build(), 0, 2)
            .method("sort", "(Ljava/lang/String;)V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 2)
            .build();
    ClassUnit demo = demo_class(P + "/ParamTypeDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Sorter").astore(0);
      return cb.aload(0)
          .iconst(3)
          .invokevirtual(P + "/Sorter", "sort", "(I)V")
          .vreturn()
          .build();
    }());
    c.classes = {sorter, demo};
    c.truth = Truth{}
                  .rc(P, "Sorter").rc(P, "ParamTypeDemo")
                  .rm("ParamTypeDemo", "run", "void")
                  .rm("Sorter", "sort", "void", "int")
                  .bm("Sorter", "sort", "void", "float")
                  .bm("Sorter", "sort", "void", "String")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: swapped parameter order.
  {
    CaseSpec c;
    c.id = "overloading-swapped-order";
    c.technique = "(int,String) order is called; the mirrored (String,int) "
                  "overload is bloated";
    ClassUnit mapper =
        ClassBuilder(P + "/Mapper")
            .default_ctor(ACC_PUBLIC)
            .method("map", "(ILjava/lang/String;)V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 3)
            .method("map", "(Ljava/lang/String;I)V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 3)
            .build();
    ClassUnit demo = demo_class(P + "/SwapDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Mapper").astore(0);
      return cb.aload(0)
          .iconst(1)
          .ldc_string("k")
          .invokevirtual(P + "/Mapper", "map", "(ILjava/lang/String;)V")
          .vreturn()
          .build();
    }());
    c.classes = {mapper, demo};
    c.truth = Truth{}
                  .rc(P, "Mapper").rc(P, "SwapDemo")
                  .rm("SwapDemo", "run", "void")
                  .rm("Mapper", "map", "void", "int,String")
                  .bm("Mapper", "map", "void", "String,int")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 5: selection priority -- widening beats boxing.
  {
    CaseSpec c;
    c.id = "overloading-selection-priority";
    c.technique = "int argument widens to the long overload rather than "
                  "boxing to the Object one";
    ClassUnit caller =
        ClassBuilder(P + "/Caller")
            .default_ctor(ACC_PUBLIC)
            .method("call", "(J)V", ACC_PUBLIC, CodeBuilder{}.vreturn().build(), 0, 3)
            .method("call", "(Ljava/lang/Object;)V", ACC_PUBLIC,
                    CodeBuilder{}.vreturn().build(), 0, 2)
            .build();
    ClassUnit demo = demo_class(P + "/PriorityDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Caller").astore(0);
      return cb.aload(0)
          .iconst(2)
          .plain(op::i2l)
          .invokevirtual(P + "/Caller", "call", "(J)V")
          .vreturn()
          .build();
    }(), 4, 1);
    c.classes = {caller, demo};
    c.truth = Truth{}
                  .rc(P, "Caller").rc(P, "PriorityDemo")
                  .rm("PriorityDemo", "run", "void")
                  .rm("Caller", "call", "void", "long")
                  .bm("Caller", "call", "void", "Object")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 6: numeric promotion at the call site.
  {
    CaseSpec c;
    c.id = "overloading-type-promotion";
    c.technique = "int argument promotes to double; the boolean overload "
                  "cannot participate";
    ClassUnit adder =
        ClassBuilder(P + "/Adder")
            .default_ctor(ACC_PUBLIC)
            .method("add", "(D)V", ACC_PUBLIC, CodeBuilder{}.vreturn().build(), 0, 3)
            .method("add", "(Z)V", ACC_PUBLIC, CodeBuilder{}.vreturn().build(), 0, 2)
            .build();
    ClassUnit demo = demo_class(P + "/PromotionDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Adder").astore(0);
      return cb.aload(0)
          .iconst(4)
          .plain(op::i2d)
          .invokevirtual(P + "/Adder", "add", "(D)V")
          .vreturn()
          .build();
    }(), 4, 1);
    c.classes = {adder, demo};
    c.truth = Truth{}
                  .rc(P, "Adder").rc(P, "PromotionDemo")
                  .rm("PromotionDemo", "run", "void")
                  .rm("Adder", "add", "void", "double")
                  .bm("Adder", "add", "void", "boolean")
                  .fields_absent()
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
