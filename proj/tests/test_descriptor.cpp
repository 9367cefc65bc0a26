#include "doctest.h"

#include <random>

#include "deblometer/descriptor.hpp"

using namespace deblometer;

TEST_CASE("field descriptors translate to source-like names") {
  CHECK(field_type_name("I") == "int");
  CHECK(field_type_name("J") == "long");
  CHECK(field_type_name("Z") == "boolean");
  CHECK(field_type_name("Ljava/lang/String;") == "String");
  CHECK(field_type_name("[Ljava/lang/String;") == "String[]");
  CHECK(field_type_name("[[I") == "int[][]");
  CHECK(field_type_name("LAbstract/Main$1;") == "Main$1");
  CHECK(field_type_name("LX;") == "X");
}

TEST_CASE("method descriptors translate per the ground-truth scheme") {
  auto main_sig = method_type_names("([Ljava/lang/String;)V");
  CHECK(main_sig.return_type == "void");
  REQUIRE(main_sig.params.size() == 1);
  CHECK(main_sig.params[0] == "String[]");

  auto empty = method_type_names("()V");
  CHECK(empty.return_type == "void");
  CHECK(empty.params.empty());

  auto ij = method_type_names("(IJ)I");
  CHECK(ij.return_type == "int");
  REQUIRE(ij.params.size() == 2);
  CHECK(ij.params[0] == "int");
  CHECK(ij.params[1] == "long");
}

TEST_CASE("malformed descriptors are rejected") {
  CHECK_THROWS_AS(field_type_name(""), MalformedDescriptor);
  CHECK_THROWS_AS(field_type_name("Q"), MalformedDescriptor);
  CHECK_THROWS_AS(field_type_name("Ljava/lang/String"), MalformedDescriptor);
  CHECK_THROWS_AS(field_type_name("II"), MalformedDescriptor);
  CHECK_THROWS_AS(field_type_name("V"), MalformedDescriptor);
  CHECK_THROWS_AS(method_type_names("I)V"), MalformedDescriptor);
  CHECK_THROWS_AS(method_type_names("(IV"), MalformedDescriptor);
  CHECK_THROWS_AS(method_type_names("(V)I"), MalformedDescriptor);
  CHECK_THROWS_AS(method_type_names("()VX"), MalformedDescriptor);
}

TEST_CASE("argument slot count follows the two-slot wide types") {
  CHECK(argument_slot_count("()V") == 0);
  CHECK(argument_slot_count("(IJ)I") == 3);
  CHECK(argument_slot_count("(DD)V") == 4);
  CHECK(argument_slot_count("(Ljava/lang/String;I)V") == 2);
}

TEST_CASE("binary class names split into package and simple name") {
  auto a = split_binary_name("Abstract/Main$1");
  CHECK(a.package == "Abstract");
  CHECK(a.simple_name == "Main$1");

  auto deep = split_binary_name("com/example/util/Box");
  CHECK(deep.package == "com.example.util");
  CHECK(deep.simple_name == "Box");

  auto dflt = split_binary_name("X");
  CHECK(dflt.package == "");
  CHECK(dflt.simple_name == "X");
}

namespace {

// Random valid descriptor generator: translation must be total on the
// grammar.
std::string random_field_descriptor(std::mt19937& rng, int depth = 0) {
  std::uniform_int_distribution<int> pick(0, depth > 2 ? 8 : 9);
  static const char* bases = "BCDFIJSZ";
  int c = pick(rng);
  if (c < 8) return std::string(1, bases[c]);
  if (c == 8) {
    std::uniform_int_distribution<int> seg(1, 3);
    std::string name;
    int segs = seg(rng);
    for (int i = 0; i < segs; ++i) {
      if (i) name += '/';
      name += static_cast<char>('A' + (rng() % 26));
      name += static_cast<char>('a' + (rng() % 26));
    }
    return "L" + name + ";";
  }
  std::uniform_int_distribution<int> dims(1, 3);
  std::string out(static_cast<std::size_t>(dims(rng)), '[');
  return out + random_field_descriptor(rng, depth + 1);
}

}  // namespace

TEST_CASE("descriptor translation is total on randomly generated grammar") {
  std::mt19937 rng(20250808);
  for (int i = 0; i < 2000; ++i) {
    std::string field = random_field_descriptor(rng);
    CHECK_NOTHROW(field_type_name(field));

    std::string method = "(";
    std::uniform_int_distribution<int> argc(0, 4);
    int n = argc(rng);
    for (int j = 0; j < n; ++j) method += random_field_descriptor(rng);
    method += ")";
    method += (rng() % 4 == 0) ? "V" : random_field_descriptor(rng);
    auto names = method_type_names(method);
    CHECK(names.params.size() == static_cast<std::size_t>(n));
    CHECK_NOTHROW(argument_slot_count(method));
  }
}
