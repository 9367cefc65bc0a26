// Generics feature suite: erased descriptors plus Signature attributes.
// Covers basic type parameters, generic inheritance, generic interfaces,
// interface composition, overloading on generic parameters, parameterized
// arrays and wildcard bounds.
#pragma once

#include "deblometer/bench_support.hpp"

namespace deblometer::suites {

inline bench::SuiteSpec generics_suite() {
  using namespace bench;
  const std::string P = "Generics";
  SuiteSpec suite;
  suite.feature = Feature::Generics;
  suite.package = P;

  // Case 1: basic generic container (suite main drives). An inert marker
  // annotation decorates the live container.
  {
    CaseSpec c;
    c.id = "generics-basic";
    c.technique = "type-parameterized box; setter runs, getter does not, and "
                  "an unread marker annotation rides on the class";
    ClassUnit marker = annotation_type(P + "/Marker");
    ClassUnit box =
        ClassBuilder(P + "/Box")
            .signature("<T:Ljava/lang/Object;>Ljava/lang/Object;")
            .annotate(annotation_descriptor(P + "/Marker"))
            .field("item", "Ljava/lang/Object;", ACC_PRIVATE)
            .field("resets", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("set", "(Ljava/lang/Object;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(1)
                        .putfield(P + "/Box", "item", "Ljava/lang/Object;")
                        .vreturn()
                        .build(),
                    2, 2)
            .method("get", "()Ljava/lang/Object;", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Box", "item", "Ljava/lang/Object;")
                        .areturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit main =
        ClassBuilder(P + "/Main")
            .default_ctor(ACC_PUBLIC)
            .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                    [&] {
                      CodeBuilder cb;
                      construct(cb, P + "/Box").astore(1);
                      cb.aload(1)
                          .ldc_string("word")
                          .invokevirtual(P + "/Box", "set",
                                         "(Ljava/lang/Object;)V");
                      call_runs(cb, P,
                                {"InheritDemo", "SourceDemo", "ComposeDemo",
                                 "GenOverloadDemo", "ArrayDemo",
                                 "WildcardDemo"});
                      return cb.vreturn().build();
                    }(),
                    2, 2)
            .build();
    c.classes = {main, marker, box};
    c.truth = Truth{}
                  .rc(P, "Main").rc(P, "Box")
                  .bc(P, "Marker")
                  .rm("Main", "main", "void", "String[]")
                  .rm("Box", "set", "void", "Object")
                  .bm("Box", "get", "Object")
                  .rf("Box", "item")
                  .bf("Box", "resets")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 2: generic inheritance; the subclass only inherits.
  {
    CaseSpec c;
    c.id = "generics-inheritance";
    c.technique = "bounded generic base; the subclass calls the inherited "
                  "storer and never its own compactor";
    ClassUnit store =
        ClassBuilder(P + "/NumberStore", ACC_PUBLIC | ACC_SUPER)
            .signature("<T:Ljava/lang/Number;>Ljava/lang/Object;")
            .field("held", "Ljava/lang/Number;", ACC_PROTECTED)
            .default_ctor(ACC_PUBLIC)
            .method("put", "(Ljava/lang/Number;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(1)
                        .putfield(P + "/NumberStore", "held",
                                  "Ljava/lang/Number;")
                        .vreturn()
                        .build(),
                    2, 2)
            .method("dump", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/NumberStore", "held",
                                  "Ljava/lang/Number;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit ints =
        ClassBuilder(P + "/IntStore", ACC_PUBLIC | ACC_SUPER, P + "/NumberStore")
            .signature("LGenerics/NumberStore<Ljava/lang/Integer;>;")
            .field("hits", "I", ACC_PRIVATE)
            .method("<init>", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .invokespecial(P + "/NumberStore", "<init>", "()V")
                        .vreturn()
                        .build(),
                    1, 1)
            .method("compact", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/IntStore", "hits", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/InheritDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/IntStore").astore(0);
      return cb.aload(0)
          .plain(op::aconst_null)
          .invokevirtual(P + "/NumberStore", "put", "(Ljava/lang/Number;)V")
          .vreturn()
          .build();
    }());
    c.classes = {store, ints, demo};
    c.truth = Truth{}
                  .rc(P, "NumberStore").rc(P, "IntStore").rc(P, "InheritDemo")
                  .rm("InheritDemo", "run", "void")
                  .rm("NumberStore", "put", "void", "Number")
                  .bm("NumberStore", "dump", "void")
                  .bm("IntStore", "compact", "void")
                  .rf("NumberStore", "held")
                  .bf("IntStore", "hits")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 3: generic interface.
  {
    CaseSpec c;
    c.id = "generics-interface";
    c.technique = "generic source interface dispatches to its only "
                  "implementation; the rewind path stays cold";
    ClassUnit source =
        ClassBuilder(P + "/Source",
                     ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
            .signature("<T:Ljava/lang/Object;>Ljava/lang/Object;")
            .abstract_method("next", "()Ljava/lang/Object;")
            .build();
    ClassUnit words =
        ClassBuilder(P + "/WordSource")
            .implements(P + "/Source")
            .signature("Ljava/lang/Object;LGenerics/Source<Ljava/lang/String;>;")
            .field("word", "Ljava/lang/String;", ACC_PRIVATE)
            .field("mark", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("next", "()Ljava/lang/Object;", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/WordSource", "word",
                                  "Ljava/lang/String;")
                        .areturn()
                        .build(),
                    1, 1)
            .method("rewind", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(0)
                        .putfield(P + "/WordSource", "mark", "I")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit demo = demo_class(P + "/SourceDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/WordSource").astore(0);
      return cb.aload(0)
          .invokeinterface(P + "/Source", "next", "()Ljava/lang/Object;")
          .pop()
          .vreturn()
          .build();
    }());
    c.classes = {source, words, demo};
    c.truth = Truth{}
                  .rc(P, "Source").rc(P, "WordSource").rc(P, "SourceDemo")
                  .rm("SourceDemo", "run", "void")
                  .rm("WordSource", "next", "Object")
                  .bm("Source", "next", "Object")
                  .bm("WordSource", "rewind", "void")
                  .rf("WordSource", "word")
                  .bf("WordSource", "mark")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 4: composition of two generic interfaces on one class.
  {
    CaseSpec c;
    c.id = "generics-interface-composition";
    c.technique = "one class implements two generic interfaces; both views "
                  "are exercised, the swap helper is not";
    ClassUnit keyed = ClassBuilder(P + "/Keyed",
                                   ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
                          .signature("<K:Ljava/lang/Object;>Ljava/lang/Object;")
                          .abstract_method("key", "()Ljava/lang/Object;")
                          .build();
    ClassUnit valued = ClassBuilder(P + "/Valued",
                                    ACC_PUBLIC | ACC_INTERFACE | ACC_ABSTRACT)
                           .signature("<V:Ljava/lang/Object;>Ljava/lang/Object;")
                           .abstract_method("value", "()Ljava/lang/Object;")
                           .build();
    ClassUnit pair =
        ClassBuilder(P + "/PairUnit")
            .implements(P + "/Keyed")
            .implements(P + "/Valued")
            .field("k", "Ljava/lang/Object;", ACC_PRIVATE)
            .field("v", "Ljava/lang/Object;", ACC_PRIVATE)
            .field("meta", "Ljava/lang/String;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("key", "()Ljava/lang/Object;", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/PairUnit", "k", "Ljava/lang/Object;")
                        .areturn()
                        .build(),
                    1, 1)
            .method("value", "()Ljava/lang/Object;", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/PairUnit", "v", "Ljava/lang/Object;")
                        .areturn()
                        .build(),
                    1, 1)
            .method("swap", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/PairUnit", "meta",
                                  "Ljava/lang/String;")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 1)
            .build();
    ClassUnit demo = demo_class(P + "/ComposeDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/PairUnit").astore(0);
      cb.aload(0)
          .invokeinterface(P + "/Keyed", "key", "()Ljava/lang/Object;")
          .pop();
      cb.aload(0)
          .invokeinterface(P + "/Valued", "value", "()Ljava/lang/Object;")
          .pop();
      return cb.vreturn().build();
    }());
    c.classes = {keyed, valued, pair, demo};
    c.truth = Truth{}
                  .rc(P, "Keyed").rc(P, "Valued").rc(P, "PairUnit")
                  .rc(P, "ComposeDemo")
                  .rm("ComposeDemo", "run", "void")
                  .rm("PairUnit", "key", "Object")
                  .rm("PairUnit", "value", "Object")
                  .bm("Keyed", "key", "Object")
                  .bm("Valued", "value", "Object")
                  .bm("PairUnit", "swap", "void")
                  .rf("PairUnit", "k")
                  .rf("PairUnit", "v")
                  .bf("PairUnit", "meta")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 5: overloading with a generic (erased) parameter.
  {
    CaseSpec c;
    c.id = "generics-overloaded-parameter";
    c.technique = "erased Object overload is selected at the call site; the "
                  "List overload never binds";
    ClassUnit printer =
        ClassBuilder(P + "/Printer")
            .field("lines", "I", ACC_PRIVATE)
            .field("width", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("print", "(Ljava/lang/Object;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/Printer", "lines", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/Printer", "lines", "I")
                        .vreturn()
                        .build(),
                    3, 2)
            .method("print", "(Ljava/util/List;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Printer", "width", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 2)
            .build();
    ClassUnit demo = demo_class(P + "/GenOverloadDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Printer").astore(0);
      return cb.aload(0)
          .ldc_string("x")
          .invokevirtual(P + "/Printer", "print", "(Ljava/lang/Object;)V")
          .vreturn()
          .build();
    }());
    c.classes = {printer, demo};
    c.truth = Truth{}
                  .rc(P, "Printer").rc(P, "GenOverloadDemo")
                  .rm("GenOverloadDemo", "run", "void")
                  .rm("Printer", "print", "void", "Object")
                  .bm("Printer", "print", "void", "List")
                  .rf("Printer", "lines")
                  .bf("Printer", "width")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 6: parameterized array.
  {
    CaseSpec c;
    c.id = "generics-parameterized-array";
    c.technique = "generic cell array is allocated and stored; the wipe path "
                  "and its pool stay untouched";
    ClassUnit grid =
        ClassBuilder(P + "/Grid")
            .signature("<T:Ljava/lang/Object;>Ljava/lang/Object;")
            .field("cells", "[Ljava/lang/Object;", ACC_PRIVATE)
            .field("pool", "[Ljava/lang/Object;", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("fill", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .iconst(2)
                        .anewarray("java/lang/Object")
                        .putfield(P + "/Grid", "cells", "[Ljava/lang/Object;")
                        .vreturn()
                        .build(),
                    3, 1)
            .method("wipe", "()V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .plain(op::aconst_null)
                        .putfield(P + "/Grid", "pool", "[Ljava/lang/Object;")
                        .vreturn()
                        .build(),
                    2, 1)
            .build();
    ClassUnit demo = demo_class(P + "/ArrayDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Grid").astore(0);
      return cb.aload(0).invokevirtual(P + "/Grid", "fill", "()V").vreturn().build();
    }());
    c.classes = {grid, demo};
    c.truth = Truth{}
                  .rc(P, "Grid").rc(P, "ArrayDemo")
                  .rm("ArrayDemo", "run", "void")
                  .rm("Grid", "fill", "void")
                  .bm("Grid", "wipe", "void")
                  .rf("Grid", "cells")
                  .bf("Grid", "pool")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  // Case 7: wildcard bound on a method signature. A raw holder class is
  // never referenced at all.
  {
    CaseSpec c;
    c.id = "generics-wildcard-bound";
    c.technique = "consumer takes a ? extends Number list; the drain twin "
                  "and a raw holder class are dead weight";
    ClassUnit feed =
        ClassBuilder(P + "/Feed")
            .field("seen", "I", ACC_PRIVATE)
            .field("skipped", "I", ACC_PRIVATE)
            .default_ctor(ACC_PUBLIC)
            .method("consume", "(Ljava/util/List;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .aload(0)
                        .getfield(P + "/Feed", "seen", "I")
                        .iconst(1)
                        .plain(op::iadd)
                        .putfield(P + "/Feed", "seen", "I")
                        .vreturn()
                        .build(),
                    3, 2)
            .method("drain", "(Ljava/util/List;)V", ACC_PUBLIC,
                    CodeBuilder{}
                        .aload(0)
                        .getfield(P + "/Feed", "skipped", "I")
                        .pop()
                        .vreturn()
                        .build(),
                    1, 2)
            .build();
    // Wildcard signature on consume.
    feed.methods[1].attributes.push_back(
        {SignatureAttr{"(Ljava/util/List<+Ljava/lang/Number;>;)V"}});
    ClassUnit raw = ClassBuilder(P + "/RawHolder")
                        .field("raw", "Ljava/lang/Object;", ACC_PRIVATE)
                        .default_ctor(ACC_PUBLIC)
                        .method("wrap", "()V", ACC_PUBLIC,
                                CodeBuilder{}
                                    .aload(0)
                                    .getfield(P + "/RawHolder", "raw",
                                              "Ljava/lang/Object;")
                                    .pop()
                                    .vreturn()
                                    .build(),
                                1, 1)
                        .build();
    ClassUnit demo = demo_class(P + "/WildcardDemo", [&] {
      CodeBuilder cb;
      construct(cb, P + "/Feed").astore(0);
      return cb.aload(0)
          .plain(op::aconst_null)
          .invokevirtual(P + "/Feed", "consume", "(Ljava/util/List;)V")
          .vreturn()
          .build();
    }());
    c.classes = {feed, raw, demo};
    c.truth = Truth{}
                  .rc(P, "Feed").rc(P, "WildcardDemo")
                  .bc(P, "RawHolder")
                  .rm("WildcardDemo", "run", "void")
                  .rm("Feed", "consume", "void", "List")
                  .bm("Feed", "drain", "void", "List")
                  .bm("RawHolder", "wrap", "void")
                  .rf("Feed", "seen")
                  .bf("Feed", "skipped")
                  .bf("RawHolder", "raw")
                  .build();
    suite.cases.push_back(std::move(c));
  }

  return suite;
}

}  // namespace deblometer::suites
