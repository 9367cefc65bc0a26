#include "doctest.h"

#include "deblometer/benchgen.hpp"
#include "deblometer/metrics.hpp"

#include "fixtures.hpp"

using namespace deblometer;

TEST_CASE("corpus shape: 13 suites, 59 cases, per-feature counts") {
  auto suites = generate_all();
  REQUIRE(suites.size() == 13);
  std::size_t total = 0;
  for (const auto& suite : suites) {
    CHECK(suite.test_cases.size() == expected_case_count(suite.feature));
    total += suite.test_cases.size();
  }
  CHECK(total == 59);
}

TEST_CASE("the abstract suite's first case is the anonymous-class fixture") {
  FeatureSuite suite = generate_suite(Feature::Abstract);
  REQUIRE(suite.test_cases.size() == 6);
  const TestCase& anon = suite.test_cases[0];
  CHECK(anon.id == "abstract-anonymous-class");
  CHECK(anon.truth == testfx::anon_case_truth());

  // Inventory of the case equals the documented universe exactly.
  Inventory inv;
  for (const auto& unit : anon.classes) {
    inv.classes.insert(class_ref_of(unit));
    for (const auto& m : unit.methods)
      if (!m.is_initializer()) inv.methods.insert(method_ref_of(unit, m));
    for (const auto& f : unit.fields) inv.fields.insert(field_ref_of(unit, f));
  }
  CHECK(inv.classes.size() == 3);
  CHECK(inv.methods.size() == 5);
  CHECK(inv.fields.size() == 2);
  CHECK(validate_against_fixture(anon.truth, inv).clean());
}

TEST_CASE("every test case passes the completeness gate against its jar") {
  for (const auto& suite : generate_all()) {
    Inventory inv = extract_inventory(suite.jar, InventoryPolicy::Strict);
    CHECK(inv.diagnostics.empty());
    CHECK(validate_against_fixture(suite.merged_truth, inv).clean());
    // Non-absent levels: required and bloated never overlap.
    for (Level level : {Level::Class, Level::Method, Level::Field}) {
      const LevelTruth& t = suite.merged_truth.at(level);
      if (t.absent) continue;
      for (const auto& r : t.required) CHECK(t.bloated.count(r) == 0);
    }
  }
}

TEST_CASE("generation is deterministic") {
  auto a = generate_all();
  auto b = generate_all();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(write_jar(a[i].jar) == write_jar(b[i].jar));
    CHECK(emit_ground_truth(a[i].merged_truth) ==
          emit_ground_truth(b[i].merged_truth));
  }
  CHECK(write_jar(build_wrapper_jar(a)) == write_jar(build_wrapper_jar(b)));
  CHECK(corpus_index(a).dump() == corpus_index(b).dump());
}

TEST_CASE("all generated class files round-trip structurally and bytewise") {
  for (const auto& suite : generate_all()) {
    for (const auto& [path, bytes] : suite.jar.entries) {
      if (path.rfind(".class") != path.size() - 6) continue;
      ClassUnit unit = parse_class(bytes);
      Bytes again = emit_class(unit);
      CHECK(again == bytes);            // canonical emission fixpoint
      CHECK(parse_class(again) == unit);  // structural fixpoint
    }
    JarArchive reread = read_jar(write_jar(suite.jar));
    CHECK(reread == suite.jar);
    GroundTruth truth_back =
        parse_ground_truth(emit_ground_truth(suite.merged_truth));
    CHECK(truth_back == suite.merged_truth);
    for (const auto& c : suite.test_cases)
      CHECK(parse_ground_truth(emit_ground_truth(c.truth)) == c.truth);
  }
}

TEST_CASE("level coverage follows the feature exclusions") {
  auto suites = generate_all();
  for (const auto& suite : suites) {
    const GroundTruth& gt = suite.merged_truth;
    switch (suite.feature) {
      case Feature::Overloading:
      case Feature::Overriding:
        CHECK(gt.fields.absent);
        CHECK_FALSE(gt.methods.absent);
        break;
      case Feature::Serialization:
        CHECK(gt.methods.absent);
        CHECK_FALSE(gt.fields.absent);
        break;
      case Feature::Deserialization:
      case Feature::Reflection:
        // Class level populated but not adversarial: no bloated classes.
        CHECK_FALSE(gt.classes.absent);
        CHECK(gt.classes.bloated.empty());
        break;
      default:
        CHECK_FALSE(gt.classes.absent);
        CHECK_FALSE(gt.methods.absent);
        CHECK_FALSE(gt.fields.absent);
        break;
    }
  }
}

TEST_CASE("suite mains: static suites list main as required; the two "
          "string-driven suites are class-level entries only") {
  for (const auto& suite : generate_all()) {
    CHECK(suite.merged_truth.classes.required.count(suite.entry_class) == 1);
    bool init_driven = suite.feature == Feature::Reflection ||
                       suite.feature == Feature::DynamicClassLoading;
    CHECK(suite.entry_has_main == !init_driven);
    if (!init_driven && !suite.merged_truth.methods.absent) {
      CHECK(suite.merged_truth.methods.required.count(ConstructRef::method(
                suite.entry_class.class_name, "main", "void", {"String[]"})) ==
            1);
    }
    if (init_driven) {
      CHECK_FALSE(suite.seeds.empty());
      // No required method is the entry: they are all reflective targets.
      CHECK(suite.merged_truth.methods.required.count(ConstructRef::method(
                suite.entry_class.class_name, "main", "void", {"String[]"})) ==
            0);
    }
  }
}

TEST_CASE("the corpus writes its documented layout") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "deblometer-corpus-test";
  fs::remove_all(dir);
  auto suites = generate_all();
  write_corpus(suites, dir);
  CHECK(fs::exists(dir / "index.json"));
  CHECK(fs::exists(dir / "wrapper.jar"));
  CHECK(fs::exists(dir / "abstract" / "bloated.jar"));
  CHECK(fs::exists(dir / "abstract" / "suite-truth.json"));
  CHECK(fs::exists(dir / "abstract" / "truth" / "abstract-anonymous-class.json"));
  CHECK(fs::exists(dir / "reflection" / "seeds.json"));
  CHECK(fs::exists(dir / "dynamic-class-loading" / "seeds.json"));
  CHECK_FALSE(fs::exists(dir / "abstract" / "seeds.json"));

  // The wrapper jar parses and its main references every suite entry.
  std::ifstream in(dir / "wrapper.jar", std::ios::binary);
  Bytes wrapper_bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  JarArchive wrapper = read_jar(wrapper_bytes);
  CHECK(wrapper.manifest.main_class() == std::string("WrapperMain"));
  CHECK(wrapper.entries.count("WrapperMain.class") == 1);
  fs::remove_all(dir);
}
