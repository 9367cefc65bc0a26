// benchgen.hpp -- programmatic synthesis of the 13 feature suites and their
// 59 test cases as bloated JARs with ground truths. Generation is pure and
// deterministic; every suite passes the ground-truth completeness gate
// before it leaves this module.
#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "deblometer/bench_support.hpp"
#include "deblometer/inventory.hpp"
#include "deblometer/jar.hpp"
#include "deblometer/shrinker.hpp"

#include "deblometer/suites/abstract_suite.hpp"
#include "deblometer/suites/annotation_suite.hpp"
#include "deblometer/suites/deserialization_suite.hpp"
#include "deblometer/suites/dynamic_loading_suite.hpp"
#include "deblometer/suites/exception_suite.hpp"
#include "deblometer/suites/externalization_suite.hpp"
#include "deblometer/suites/generics_suite.hpp"
#include "deblometer/suites/interface_suite.hpp"
#include "deblometer/suites/lambda_suite.hpp"
#include "deblometer/suites/overloading_suite.hpp"
#include "deblometer/suites/overriding_suite.hpp"
#include "deblometer/suites/reflection_suite.hpp"
#include "deblometer/suites/serialization_suite.hpp"

namespace deblometer {

class GenerationError : public std::runtime_error {
public:
  explicit GenerationError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

using TestCase = bench::CaseSpec;

struct FeatureSuite {
  Feature feature = Feature::Abstract;
  std::string package;
  std::vector<TestCase> test_cases;
  JarArchive jar;
  GroundTruth merged_truth;
  ConstructRef entry_class;
  bool entry_has_main = false;
  std::vector<ConstructRef> seeds;
};

namespace detail {

inline Inventory inventory_of_units(const std::vector<ClassUnit>& units,
                                    const InventoryOptions& options = {}) {
  Inventory inv;
  for (const auto& unit : units) {
    inv.classes.insert(class_ref_of(unit));
    for (const auto& m : unit.methods) {
      if (!options.include_initializers && m.is_initializer()) continue;
      inv.methods.insert(method_ref_of(unit, m));
    }
    for (const auto& f : unit.fields) inv.fields.insert(field_ref_of(unit, f));
  }
  return inv;
}

inline bench::SuiteSpec build_suite_spec(Feature feature) {
  switch (feature) {
    case Feature::Abstract: return suites::abstract_suite();
    case Feature::Annotation: return suites::annotation_suite();
    case Feature::Deserialization: return suites::deserialization_suite();
    case Feature::DynamicClassLoading: return suites::dynamic_loading_suite();
    case Feature::Exception: return suites::exception_suite();
    case Feature::Externalization: return suites::externalization_suite();
    case Feature::Generics: return suites::generics_suite();
    case Feature::Interface: return suites::interface_suite();
    case Feature::Lambda: return suites::lambda_suite();
    case Feature::Overloading: return suites::overloading_suite();
    case Feature::Overriding: return suites::overriding_suite();
    case Feature::Reflection: return suites::reflection_suite();
    case Feature::Serialization: return suites::serialization_suite();
  }
  throw GenerationError("unknown feature");
}

}  // namespace detail

/// Builds one feature suite: jar, per-case truths, merged truth; enforces
/// the generation-time gates (case counts, name uniqueness, per-case and
/// suite-wide ground-truth completeness).
inline FeatureSuite generate_suite(Feature feature) {
  bench::SuiteSpec spec = detail::build_suite_spec(feature);
  FeatureSuite suite;
  suite.feature = feature;
  suite.package = spec.package;
  suite.seeds = spec.seeds;

  if (spec.cases.size() != expected_case_count(feature))
    throw GenerationError(std::string(feature_name(feature)) + ": expected " +
                          std::to_string(expected_case_count(feature)) +
                          " test cases, built " +
                          std::to_string(spec.cases.size()));

  std::set<std::string> simple_names;
  std::vector<GroundTruth> truths;
  for (auto& c : spec.cases) {
    // Per-case completeness gate.
    CompletenessReport report =
        validate_against_fixture(c.truth, detail::inventory_of_units(c.classes));
    if (!report.clean())
      throw GenerationError(std::string(feature_name(feature)) + "/" + c.id +
                            " fails the ground-truth completeness gate:\n" +
                            report.summary());
    for (const auto& unit : c.classes) {
      auto split = split_binary_name(unit.binary_name);
      if (!simple_names.insert(split.simple_name).second)
        throw GenerationError(std::string(feature_name(feature)) +
                              ": duplicate simple class name " +
                              split.simple_name);
      if (split.package != spec.package)
        throw GenerationError(std::string(feature_name(feature)) + "/" + c.id +
                              ": class " + unit.binary_name +
                              " is outside the suite package");
      // Descriptor translation must stay injective after package erasure:
      // no two declared members of one class may collapse to one ref.
      std::set<ConstructRef> member_refs;
      for (const auto& m : unit.methods)
        if (!member_refs.insert(method_ref_of(unit, m)).second)
          throw GenerationError(std::string(feature_name(feature)) +
                                ": member refs collide in " +
                                unit.binary_name + " on " + m.name);
      for (const auto& f : unit.fields)
        if (!member_refs.insert(field_ref_of(unit, f)).second)
          throw GenerationError(std::string(feature_name(feature)) +
                                ": member refs collide in " +
                                unit.binary_name + " on " + f.name);
    }
    truths.push_back(c.truth);
    suite.test_cases.push_back(std::move(c));
  }

  try {
    suite.merged_truth = merge_ground_truths(truths);
  } catch (const TruthError& e) {
    throw GenerationError(std::string(feature_name(feature)) +
                          ": suite merge failed: " + e.what());
  }

  suite.entry_class = ConstructRef::cls(spec.package, spec.entry_simple_name);
  std::string entry_binary = spec.package + "/" + spec.entry_simple_name;
  std::string main_class_dotted = spec.package + "." + spec.entry_simple_name;

  suite.jar.manifest.set("Manifest-Version", "1.0");
  suite.jar.manifest.set("Main-Class", main_class_dotted);
  bool entry_found = false;
  for (const auto& c : suite.test_cases) {
    for (const auto& unit : c.classes) {
      suite.jar.add(unit.binary_name + ".class", emit_class(unit));
      if (unit.binary_name == entry_binary) {
        entry_found = true;
        for (const auto& m : unit.methods)
          if (m.name == "main" && m.descriptor == "([Ljava/lang/String;)V")
            suite.entry_has_main = true;
      }
    }
  }
  if (!entry_found)
    throw GenerationError(std::string(feature_name(feature)) +
                          ": entry class " + entry_binary + " was not built");
  if (!suite.merged_truth.classes.required.count(suite.entry_class))
    throw GenerationError(std::string(feature_name(feature)) +
                          ": entry class is not in the required set");

  // Suite-wide completeness: the bloated JAR's inventory equals the union of
  // required and bloated sets at every non-absent level.
  Inventory jar_inventory =
      extract_inventory(suite.jar, InventoryPolicy::Strict);
  CompletenessReport suite_report =
      validate_against_fixture(suite.merged_truth, jar_inventory);
  if (!suite_report.clean())
    throw GenerationError(std::string(feature_name(feature)) +
                          ": suite-wide completeness gate failed:\n" +
                          suite_report.summary());
  return suite;
}

/// All 13 suites plus the wrapper entry manifest data.
inline std::vector<FeatureSuite> generate_all() {
  std::vector<FeatureSuite> suites;
  std::size_t total = 0;
  for (Feature f : kAllFeatures) {
    suites.push_back(generate_suite(f));
    total += suites.back().test_cases.size();
  }
  if (suites.size() != 13 || total != 59)
    throw GenerationError("corpus shape mismatch: " +
                          std::to_string(suites.size()) + " suites, " +
                          std::to_string(total) + " test cases");
  return suites;
}

/// Wrapper JAR: one main that drives every suite -- static mains are
/// invoked, initializer-driven suite mains are instantiated.
inline JarArchive build_wrapper_jar(const std::vector<FeatureSuite>& suites) {
  using namespace bench;
  CodeBuilder cb;
  for (const auto& suite : suites) {
    std::string binary = suite.package + "/" + suite.entry_class.class_name;
    if (suite.entry_has_main) {
      cb.plain(op::aconst_null)
          .invokestatic(binary, "main", "([Ljava/lang/String;)V");
    } else {
      construct(cb, binary).pop();
    }
  }
  ClassUnit wrapper_main =
      ClassBuilder("WrapperMain")
          .default_ctor(ACC_PUBLIC)
          .method("main", "([Ljava/lang/String;)V", ACC_PUBLIC | ACC_STATIC,
                  cb.vreturn().build(), 2, 1)
          .build();
  JarArchive jar;
  jar.manifest.set("Manifest-Version", "1.0");
  jar.manifest.set("Main-Class", "WrapperMain");
  jar.add("WrapperMain.class", emit_class(wrapper_main));
  return jar;
}

inline nlohmann::ordered_json corpus_index(
    const std::vector<FeatureSuite>& suites) {
  nlohmann::ordered_json index;
  index["suites"] = nlohmann::ordered_json::array();
  std::size_t total = 0;
  for (const auto& suite : suites) {
    nlohmann::ordered_json entry;
    std::string slug = feature_slug(suite.feature);
    entry["feature"] = feature_name(suite.feature);
    entry["slug"] = slug;
    entry["package"] = suite.package;
    entry["jar"] = slug + "/bloated.jar";
    entry["suite_truth"] = slug + "/suite-truth.json";
    entry["entry_class"] = {{"package", suite.entry_class.package},
                            {"name", suite.entry_class.class_name}};
    entry["entry_has_main"] = suite.entry_has_main;
    if (!suite.seeds.empty()) entry["seeds"] = slug + "/seeds.json";
    entry["test_cases"] = nlohmann::ordered_json::array();
    for (const auto& c : suite.test_cases) {
      entry["test_cases"].push_back(
          {{"id", c.id},
           {"technique", c.technique},
           {"truth", slug + "/truth/" + c.id + ".json"}});
      ++total;
    }
    index["suites"].push_back(std::move(entry));
  }
  index["total_test_cases"] = total;
  index["wrapper_jar"] = "wrapper.jar";
  index["wrapper_main"] = "WrapperMain";
  return index;
}

namespace detail {

inline void write_file(const std::filesystem::path& path,
                       std::span<const u1> data) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw GenerationError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& text) {
  write_file(path, std::span<const u1>(
                       reinterpret_cast<const u1*>(text.data()), text.size()));
}

}  // namespace detail

/// Writes the corpus layout:
///   <out>/<feature>/bloated.jar
///   <out>/<feature>/truth/<case-id>.json
///   <out>/<feature>/suite-truth.json
///   <out>/<feature>/seeds.json        (features with string-referenced targets)
///   <out>/index.json, <out>/wrapper.jar
inline void write_corpus(const std::vector<FeatureSuite>& suites,
                         const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (const auto& suite : suites) {
    fs::path dir = out_dir / feature_slug(suite.feature);
    fs::create_directories(dir / "truth");
    detail::write_file(dir / "bloated.jar", std::span<const u1>(write_jar(suite.jar)));
    detail::write_file(dir / "suite-truth.json",
                       emit_ground_truth(suite.merged_truth));
    for (const auto& c : suite.test_cases)
      detail::write_file(dir / "truth" / (c.id + ".json"),
                         emit_ground_truth(c.truth));
    if (!suite.seeds.empty())
      detail::write_file(dir / "seeds.json", emit_seeds_json(suite.seeds));
  }
  detail::write_file(out_dir / "wrapper.jar",
                     std::span<const u1>(write_jar(build_wrapper_jar(suites))));
  detail::write_file(out_dir / "index.json", corpus_index(suites).dump(1) + "\n");
}

}  // namespace deblometer
