#include "doctest.h"

#include "deblometer/ground_truth.hpp"

using namespace deblometer;

// The anonymous-class test case's ground truth document, frozen verbatim.
static const char* kAnonCaseTruth = R"({
 "CLASS": {
  "required": [
    {"package": "Abstract", "name": "Main"},
    {"package": "Abstract", "name": "Car"},
    {"package": "Abstract", "name": "Main$1"}
   ],
  "bloated": []
 },
 "METHOD": {
  "required": [
    {"type": "Main", "name": "main", "return": "void", "param": "String[]"},
    {"type": "Main$1", "name": "engine", "return": "void", "param": ""}
   ],
  "bloated": [
    {"type": "Car", "name": "engine", "return": "void", "param": ""},
    {"type": "Car", "name": "material", "return": "void", "param": ""},
    {"type": "Main$1", "name": "material", "return": "void", "param": ""}
   ]
 },
 "FIELD": {
  "required": [
    {"class": "Car", "name": "piston"}
   ],
  "bloated": [
    {"class": "Car", "name": "material"}
   ]
 }
})";

TEST_CASE("the anonymous-class document parses to the expected sets") {
  GroundTruth gt = parse_ground_truth(kAnonCaseTruth);
  CHECK(gt.classes.required.size() == 3);
  CHECK(gt.classes.bloated.size() == 0);
  CHECK(gt.methods.required.size() == 2);
  CHECK(gt.methods.bloated.size() == 3);
  CHECK(gt.fields.required.size() == 1);
  CHECK(gt.fields.bloated.size() == 1);

  CHECK(gt.classes.required.count(ConstructRef::cls("Abstract", "Main$1")) == 1);
  CHECK(gt.methods.required.count(ConstructRef::method(
            "Main", "main", "void", {"String[]"})) == 1);
  CHECK(gt.methods.required.count(
            ConstructRef::method("Main$1", "engine", "void", {})) == 1);
  CHECK(gt.methods.bloated.count(
            ConstructRef::method("Car", "material", "void", {})) == 1);
  CHECK(gt.fields.required.count(ConstructRef::field("Car", "piston")) == 1);
}

TEST_CASE("emit/parse is a fixpoint") {
  GroundTruth gt = parse_ground_truth(kAnonCaseTruth);
  std::string text = emit_ground_truth(gt);
  GroundTruth back = parse_ground_truth(text);
  CHECK(back == gt);
  CHECK(emit_ground_truth(back) == text);

  GroundTruth empty;
  std::string empty_text = emit_ground_truth(empty);
  CHECK(parse_ground_truth(empty_text) == empty);
}

TEST_CASE("document with empty arrays everywhere parses to an empty truth") {
  const char* doc = R"({
    "CLASS": {"required": [], "bloated": []},
    "METHOD": {"required": [], "bloated": []},
    "FIELD": {"required": [], "bloated": []}
  })";
  GroundTruth gt = parse_ground_truth(doc);
  CHECK(gt.classes.universe().empty());
  CHECK(gt.methods.universe().empty());
  CHECK(gt.fields.universe().empty());
  CHECK_FALSE(gt.methods.absent);
}

TEST_CASE("absent levels are encoded explicitly and distinctly from 0/0") {
  const char* doc = R"({
    "CLASS": {"required": [], "bloated": []},
    "METHOD": {"absent": true},
    "FIELD": {"required": [], "bloated": []}
  })";
  GroundTruth gt = parse_ground_truth(doc);
  CHECK(gt.methods.absent);
  CHECK_FALSE(gt.classes.absent);
  GroundTruth back = parse_ground_truth(emit_ground_truth(gt));
  CHECK(back == gt);
}

TEST_CASE("schema acceptance is closed") {
  SUBCASE("unknown top-level key") {
    CHECK_THROWS_AS(parse_ground_truth(R"({
      "CLASS": {"required": [], "bloated": []},
      "METHOD": {"required": [], "bloated": []},
      "FIELD": {"required": [], "bloated": []},
      "NOTES": []
    })"),
                    TruthError);
  }
  SUBCASE("unknown entry key") {
    try {
      parse_ground_truth(R"({
        "CLASS": {"required": [{"package": "A", "name": "B", "size": 3}], "bloated": []},
        "METHOD": {"required": [], "bloated": []},
        "FIELD": {"required": [], "bloated": []}
      })");
      FAIL("expected SchemaViolation");
    } catch (const TruthError& e) {
      CHECK(e.kind == TruthErrorKind::SchemaViolation);
      CHECK(std::string(e.what()).find("size") != std::string::npos);
    }
  }
  SUBCASE("missing level") {
    CHECK_THROWS_AS(parse_ground_truth(R"({
      "CLASS": {"required": [], "bloated": []},
      "METHOD": {"required": [], "bloated": []}
    })"),
                    TruthError);
  }
  SUBCASE("not JSON") {
    CHECK_THROWS_AS(parse_ground_truth("not json"), TruthError);
  }
}

TEST_CASE("a ref listed in both sections is an overlap violation") {
  try {
    parse_ground_truth(R"({
      "CLASS": {"required": [], "bloated": []},
      "METHOD": {
        "required": [{"type": "Car", "name": "engine", "return": "void", "param": ""}],
        "bloated": [{"type": "Car", "name": "engine", "return": "void", "param": ""}]
      },
      "FIELD": {"required": [], "bloated": []}
    })");
    FAIL("expected OverlapViolation");
  } catch (const TruthError& e) {
    CHECK(e.kind == TruthErrorKind::OverlapViolation);
  }
}

TEST_CASE("suite merge unions cases and rejects cross-case overlap") {
  GroundTruth a;
  a.classes.required.insert(ConstructRef::cls("P", "A"));
  a.methods.required.insert(ConstructRef::method("A", "run", "void", {}));
  GroundTruth b;
  b.classes.required.insert(ConstructRef::cls("P", "B"));
  b.methods.bloated.insert(ConstructRef::method("B", "skip", "void", {}));

  GroundTruth merged = merge_ground_truths({a, b});
  CHECK(merged.classes.required.size() == 2);
  CHECK(merged.methods.required.size() == 1);
  CHECK(merged.methods.bloated.size() == 1);

  GroundTruth clash;
  clash.classes.required.insert(ConstructRef::cls("P", "A"));
  CHECK_THROWS_AS(merge_ground_truths({a, clash}), TruthError);
}

TEST_CASE("completeness gate reports missing and extra constructs") {
  GroundTruth gt = parse_ground_truth(kAnonCaseTruth);
  Inventory inv;
  for (const auto& r : gt.classes.universe()) inv.classes.insert(r);
  for (const auto& r : gt.methods.universe()) inv.methods.insert(r);
  for (const auto& r : gt.fields.universe()) inv.fields.insert(r);
  CHECK(validate_against_fixture(gt, inv).clean());

  // Truth missing Main.main: the gate flags it as extra in the fixture.
  GroundTruth trimmed = gt;
  trimmed.methods.required.erase(
      ConstructRef::method("Main", "main", "void", {"String[]"}));
  CompletenessReport report = validate_against_fixture(trimmed, inv);
  CHECK_FALSE(report.clean());
  bool found = false;
  for (const auto& l : report.levels)
    for (const auto& r : l.extra_in_fixture)
      found = found || r.member_name == "main";
  CHECK(found);

  // Inventory missing a truth ref: flagged as missing in fixture.
  Inventory gutted = inv;
  gutted.fields.erase(ConstructRef::field("Car", "piston"));
  report = validate_against_fixture(gt, gutted);
  CHECK_FALSE(report.clean());
  CHECK(report.summary().find("piston") != std::string::npos);
}

TEST_CASE("subtracting corrupted classes drops their member refs") {
  GroundTruth gt = parse_ground_truth(kAnonCaseTruth);
  GroundTruth reduced =
      subtract_classes(gt, {ConstructRef::cls("Abstract", "Car")});
  CHECK(reduced.classes.required.count(ConstructRef::cls("Abstract", "Car")) == 0);
  CHECK(reduced.classes.required.size() == 2);
  CHECK(reduced.methods.bloated.size() == 1);  // only Main$1.material left
  CHECK(reduced.fields.required.empty());
  CHECK(reduced.fields.bloated.empty());
}
