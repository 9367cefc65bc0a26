#include "doctest.h"

#include <fstream>

#include "deblometer/pipeline.hpp"

using namespace deblometer;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("deblometer-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

RunConfig base_config(const fs::path& out_dir) {
  RunConfig config;
  config.out_dir = out_dir;
  config.suites = {Feature::Abstract, Feature::Exception};
  return config;
}

}  // namespace

TEST_CASE("no-op policy scores identity: full soundness, all bloat kept") {
  fs::path dir = fresh_dir("noop");
  RunConfig config = base_config(dir);
  config.policy = ShrinkPolicy::no_op();
  RunResult result = run_pipeline(config);
  CHECK(result.exit_code == kExitOk);
  REQUIRE_FALSE(result.rows.empty());
  for (const auto& row : result.rows) {
    auto s = soundness(row.counts);
    REQUIRE(s.has_value());
    CHECK(percent_half_up(*s) == 100);
    CHECK(row.counts.bloated_removed == 0);
    CHECK(row.counts.fn == 0);
    // Identity precision: required / (required + bloated).
    auto p = precision(row.counts);
    REQUIRE(p.has_value());
    CHECK(p->num == row.counts.required_total());
    CHECK(p->den == row.counts.required_total() + row.counts.bloated_total());
  }
  CHECK(fs::exists(dir / "report.txt"));
  CHECK(fs::exists(dir / "report.csv"));
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "details" / "abstract.json"));
  CHECK(fs::exists(dir / "debloated" / "abstract.jar"));
  fs::remove_all(dir);
}

TEST_CASE("an external copy command equals the built-in no-op") {
  fs::path noop_dir = fresh_dir("noop-eq");
  RunConfig noop = base_config(noop_dir);
  noop.policy = ShrinkPolicy::no_op();
  RunResult noop_result = run_pipeline(noop);

  fs::path ext_dir = fresh_dir("ext-copy");
  RunConfig ext = base_config(ext_dir);
  ext.tool = ToolKind::External;
  ext.external_command = "cp {input} {output}";
  RunResult ext_result = run_pipeline(ext);

  CHECK(ext_result.exit_code == kExitOk);
  REQUIRE(ext_result.rows.size() == noop_result.rows.size());
  for (std::size_t i = 0; i < ext_result.rows.size(); ++i)
    CHECK(ext_result.rows[i].counts == noop_result.rows[i].counts);
  CHECK(slurp(ext_dir / "report.csv") == slurp(noop_dir / "report.csv"));
  fs::remove_all(noop_dir);
  fs::remove_all(ext_dir);
}

TEST_CASE("an external command that writes nothing falls back to identity") {
  fs::path dir = fresh_dir("ext-silent");
  RunConfig config = base_config(dir);
  config.suites = {Feature::Exception};
  config.tool = ToolKind::External;
  config.external_command = "echo {input} {output} > /dev/null";
  RunResult result = run_pipeline(config);
  CHECK(result.exit_code == kExitOk);  // never an error
  REQUIRE_FALSE(result.rows.empty());
  for (const auto& row : result.rows) {
    CHECK(percent_half_up(*soundness(row.counts)) == 100);
    CHECK(row.counts.bloated_removed == 0);
  }
  fs::remove_all(dir);
}

TEST_CASE("a failing external command is recorded and skips the suite") {
  fs::path dir = fresh_dir("ext-fail");
  RunConfig config = base_config(dir);
  config.suites = {Feature::Exception};
  config.tool = ToolKind::External;
  config.external_command = "false {input} {output}";
  RunResult result = run_pipeline(config);
  CHECK(result.exit_code == kExitToolFailure);
  REQUIRE(result.suites.size() == 1);
  CHECK(result.suites[0].status == SuiteStatus::ToolFailed);
  CHECK(result.suites[0].rows.empty());
  CHECK(result.rows.empty());
  fs::remove_all(dir);
}

TEST_CASE("corrupted output: strict reports it, lenient scores around it") {
  // An external "tool" that hands back a JAR with one truncated class entry.
  fs::path dir = fresh_dir("corrupt");
  FeatureSuite suite = generate_suite(Feature::Exception);
  JarArchive damaged = suite.jar;
  Bytes& entry = damaged.entries.at("Exception/IoFault.class");
  entry.resize(entry.size() / 2);
  fs::path damaged_path = dir / "damaged.jar";
  {
    std::ofstream out(damaged_path, std::ios::binary);
    Bytes bytes = write_jar(damaged);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  }

  RunConfig config = base_config(dir / "strict");
  config.suites = {Feature::Exception};
  config.tool = ToolKind::External;
  config.external_command = "cp " + damaged_path.string() + " {output} # {input}";

  SUBCASE("strict mode flags corrupted output") {
    RunResult result = run_pipeline(config);
    CHECK(result.exit_code == kExitCorruptedOutput);
    REQUIRE(result.suites.size() == 1);
    CHECK(result.suites[0].status == SuiteStatus::CorruptedOutput);
    CHECK(result.suites[0].error.find("IoFault") != std::string::npos);
  }

  SUBCASE("lenient mode diagnoses and keeps scoring") {
    config.out_dir = dir / "lenient";
    config.lenient = true;
    RunResult result = run_pipeline(config);
    CHECK(result.exit_code == kExitOk);
    REQUIRE(result.suites.size() == 1);
    const SuiteOutcome& outcome = result.suites[0];
    CHECK(outcome.status == SuiteStatus::Scored);
    REQUIRE(outcome.diagnostics.size() == 1);
    CHECK(outcome.diagnostics[0].entry_path == "Exception/IoFault.class");
    // Default counting treats the lost constructs as missing...
    bool saw_default = false, saw_excluded = false;
    for (const auto& c : outcome.cases) {
      if (c.id != "exception-extended-fields") continue;
      for (const auto& l : c.levels) {
        if (l.level != Level::Method) continue;
        CHECK(l.counts.fn >= 1);  // IoFault.getPath is gone
        saw_default = true;
        // ...while the alternate view drops them from the universe.
        REQUIRE(l.counts_excluding_corrupted.has_value());
        CHECK(l.counts_excluding_corrupted->fn == 0);
        saw_excluded = true;
      }
    }
    CHECK(saw_default);
    CHECK(saw_excluded);
  }
  fs::remove_all(dir);
}

TEST_CASE("pipeline runs are deterministic byte for byte") {
  fs::path a = fresh_dir("det-a");
  fs::path b = fresh_dir("det-b");
  RunConfig ca = base_config(a);
  RunConfig cb = base_config(b);
  run_pipeline(ca);
  run_pipeline(cb);
  for (const char* name : {"report.txt", "report.csv", "report.json"})
    CHECK(slurp(a / name) == slurp(b / name));
  CHECK(slurp(a / "details" / "abstract.json") ==
        slurp(b / "details" / "abstract.json"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("parallel evaluation matches sequential") {
  fs::path seq = fresh_dir("seq");
  fs::path par = fresh_dir("par");
  RunConfig cs = base_config(seq);
  cs.suites = {Feature::Abstract, Feature::Exception, Feature::Lambda,
               Feature::Generics};
  RunConfig cp = cs;
  cp.out_dir = par;
  cp.jobs = 4;
  run_pipeline(cs);
  run_pipeline(cp);
  CHECK(slurp(seq / "report.csv") == slurp(par / "report.csv"));
  fs::remove_all(seq);
  fs::remove_all(par);
}

TEST_CASE("the exec hook runs per suite and its status is recorded") {
  fs::path dir = fresh_dir("hook");
  RunConfig config = base_config(dir);
  config.suites = {Feature::Exception};
  config.exec_hook = "test -f {jar}";
  RunResult result = run_pipeline(config);
  REQUIRE(result.suites.size() == 1);
  REQUIRE(result.suites[0].exec_hook_exit.has_value());
  CHECK(*result.suites[0].exec_hook_exit == 0);
  fs::remove_all(dir);
}

TEST_CASE("config validation rejects malformed setups") {
  RunConfig config;
  config.out_dir = "/tmp/x";
  config.tool = ToolKind::External;
  CHECK_THROWS_AS(config.validate(), ConfigError);  // no command
  config.external_command = "run {input}";
  CHECK_THROWS_AS(config.validate(), ConfigError);  // no {output}
  config.external_command = "run {input} {output} {input}";
  CHECK_THROWS_AS(config.validate(), ConfigError);  // {input} twice
  config.external_command = "run {input} {output}";
  CHECK_NOTHROW(config.validate());
  config.exec_hook = "java -jar";
  CHECK_THROWS_AS(config.validate(), ConfigError);  // no {jar}

  CHECK_THROWS_AS(parse_run_config_json("{\"bogus\": 1}"), ConfigError);
  CHECK_THROWS_AS(parse_run_config_json("not json"), ConfigError);
  RunConfig parsed = parse_run_config_json(R"({
    "suites": ["abstract", "dynamic-class-loading"],
    "tool": "builtin",
    "policy": {"mode": "aggressive"},
    "lenient": true,
    "report_formats": ["csv"],
    "out_dir": "/tmp/deblometer-cfg",
    "jobs": 2
  })");
  CHECK(parsed.suites.size() == 2);
  CHECK(parsed.policy.mode == ShrinkMode::Aggressive);
  CHECK(parsed.lenient);
  CHECK(parsed.report_formats == std::set<ReportFormat>{ReportFormat::Csv});
  CHECK(parsed.jobs == 2);
}

TEST_CASE("report rendering: dashes for N/A, CSV round-trip, JSON nulls") {
  Counts na;  // nothing required, nothing bloated
  ReportRow na_row = build_report_row("serialization", Level::Class, na);
  Counts normal;
  normal.tp = 5;
  normal.fp = 13;
  normal.bloated_removed = 7;
  ReportRow normal_row = build_report_row("abstract", Level::Method, normal);
  std::vector<ReportRow> rows = {normal_row, na_row};

  std::string text = render_report(rows, ReportFormat::Text);
  CHECK(text.find("-") != std::string::npos);
  CHECK(text.find("5/5") != std::string::npos);
  CHECK(text.find("7/20") != std::string::npos);
  CHECK(text.find("28") != std::string::npos);

  std::string csv = render_report(rows, ReportFormat::Csv);
  std::vector<ReportRow> back = parse_report_csv(csv);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].feature == rows[i].feature);
    CHECK(back[i].level == rows[i].level);
    CHECK(back[i].counts == rows[i].counts);
  }

  auto doc = nlohmann::ordered_json::parse(
      render_report(rows, ReportFormat::Json));
  REQUIRE(doc.is_array());
  CHECK(doc[1]["soundness_pct"].is_null());
  CHECK(doc[0]["precision_pct"] == 28);
}
