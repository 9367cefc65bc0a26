// pipeline.hpp -- the evaluation pipeline: generate the bloated suites, run
// the built-in shrinker (or an external tool) over them, extract the
// debloated inventories, score them against the ground truths and render the
// report artifacts. Unsound results are data, not errors; only broken
// configuration, tool failures and corrupted output under strict parsing
// change the exit status.
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "deblometer/benchgen.hpp"
#include "deblometer/inventory.hpp"
#include "deblometer/metrics.hpp"
#include "deblometer/report.hpp"
#include "deblometer/shrinker.hpp"

namespace deblometer {

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

enum class ToolKind { Builtin, External };

struct RunConfig {
  std::vector<Feature> suites;  // empty selects all 13
  ToolKind tool = ToolKind::Builtin;
  std::string external_command;  // must contain {input} and {output} once each
  ShrinkPolicy policy = ShrinkPolicy::conservative();
  bool oracle = false;           // built-in oracle mode: keep the required sets
  bool use_suite_seeds = false;  // merge each suite's published seeds
  bool lenient = false;          // lenient inventory extraction
  std::set<ReportFormat> report_formats = {ReportFormat::Text,
                                           ReportFormat::Csv,
                                           ReportFormat::Json};
  std::filesystem::path out_dir;
  std::string exec_hook;  // optional; {jar} placeholder, exit recorded
  unsigned jobs = 1;

  void validate() const {
    auto count_of = [](const std::string& s, const std::string& needle) {
      std::size_t n = 0;
      for (std::size_t pos = s.find(needle); pos != std::string::npos;
           pos = s.find(needle, pos + needle.size()))
        ++n;
      return n;
    };
    if (tool == ToolKind::External) {
      if (external_command.empty())
        throw ConfigError("external tool selected but no command given");
      if (count_of(external_command, "{input}") != 1 ||
          count_of(external_command, "{output}") != 1)
        throw ConfigError(
            "external command must contain {input} and {output} exactly once");
      if (oracle)
        throw ConfigError("oracle mode applies to the built-in tool only");
    } else if (!external_command.empty()) {
      throw ConfigError("external command given but tool is builtin");
    }
    if (!exec_hook.empty() && count_of(exec_hook, "{jar}") != 1)
      throw ConfigError("exec hook must contain {jar} exactly once");
    if (out_dir.empty()) throw ConfigError("out_dir is required");
    if (jobs == 0) throw ConfigError("jobs must be at least 1");
    policy.validate();
  }
};

inline Feature feature_from_name(const std::string& name) {
  for (Feature f : kAllFeatures)
    if (name == feature_name(f) || name == feature_slug(f)) return f;
  throw ConfigError("unknown feature: " + name);
}

inline ReportFormat report_format_from_name(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw ConfigError("unknown report format: " + name);
}

inline RunConfig parse_run_config_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("run config is not well-formed JSON: ") +
                      e.what());
  }
  if (!doc.is_object()) throw ConfigError("run config: expected an object");
  RunConfig config;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    try {
      if (key == "suites") {
        for (const auto& name : it.value())
          config.suites.push_back(feature_from_name(name.get<std::string>()));
      } else if (key == "tool") {
        std::string tool = it.value().get<std::string>();
        if (tool == "builtin") config.tool = ToolKind::Builtin;
        else if (tool == "external") config.tool = ToolKind::External;
        else throw ConfigError("unknown tool: " + tool);
      } else if (key == "external_command") {
        config.external_command = it.value().get<std::string>();
      } else if (key == "policy") {
        config.policy = parse_policy_json(it.value().dump());
      } else if (key == "oracle") {
        config.oracle = it.value().get<bool>();
      } else if (key == "use_suite_seeds") {
        config.use_suite_seeds = it.value().get<bool>();
      } else if (key == "lenient") {
        config.lenient = it.value().get<bool>();
      } else if (key == "report_formats") {
        config.report_formats.clear();
        for (const auto& name : it.value())
          config.report_formats.insert(
              report_format_from_name(name.get<std::string>()));
      } else if (key == "out_dir") {
        config.out_dir = it.value().get<std::string>();
      } else if (key == "exec_hook") {
        config.exec_hook = it.value().get<std::string>();
      } else if (key == "jobs") {
        config.jobs = it.value().get<unsigned>();
      } else {
        throw ConfigError("run config: unknown key \"" + key + "\"");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("run config key \"" + key + "\": " + e.what());
    } catch (const ShrinkError& e) {
      throw ConfigError(e.what());
    }
  }
  return config;
}

// ---------------------------------------------------------------------------
// Outcomes

enum class SuiteStatus { Scored, ToolFailed, CorruptedOutput };

struct LevelOutcome {
  Level level = Level::Class;
  Counts counts;
  // Alternate counting with corrupted classes' constructs excluded from the
  // universe; present only when lenient parsing recorded diagnostics.
  std::optional<Counts> counts_excluding_corrupted;
};

struct CaseOutcome {
  std::string id;
  std::string technique;
  std::vector<LevelOutcome> levels;
};

struct SuiteOutcome {
  Feature feature = Feature::Abstract;
  SuiteStatus status = SuiteStatus::Scored;
  std::string error;                    // tool/corruption failure text
  std::vector<Diagnostic> diagnostics;  // lenient parse findings
  std::vector<ReportRow> rows;          // grouped per level
  std::vector<CaseOutcome> cases;
  std::optional<int> exec_hook_exit;
};

struct RunResult {
  std::vector<SuiteOutcome> suites;
  std::vector<ReportRow> rows;  // all scored suites, feature order
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitToolFailure = 3;
inline constexpr int kExitCorruptedOutput = 4;

namespace detail {

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

inline void write_binary_file(const std::filesystem::path& path,
                              const Bytes& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

inline Bytes read_binary_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  return Bytes((std::istreambuf_iterator<char>(in)),
               std::istreambuf_iterator<char>());
}

inline std::string substitute(std::string text, const std::string& key,
                              const std::string& value) {
  std::size_t pos = text.find(key);
  if (pos != std::string::npos) text.replace(pos, key.size(), value);
  return text;
}

inline int run_command(const std::string& command) {
  int status = std::system(command.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

inline nlohmann::ordered_json counts_json(const Counts& c) {
  nlohmann::ordered_json obj;
  obj["tp"] = c.tp;
  obj["fp"] = c.fp;
  obj["fn"] = c.fn;
  obj["bloated_removed"] = c.bloated_removed;
  obj["unknown_retained"] = c.unknown_retained;
  auto s = soundness(c);
  auto p = precision(c);
  obj["soundness_pct"] = s ? nlohmann::ordered_json(percent_half_up(*s))
                           : nlohmann::ordered_json(nullptr);
  obj["precision_pct"] = p ? nlohmann::ordered_json(percent_half_up(*p))
                           : nlohmann::ordered_json(nullptr);
  return obj;
}

inline nlohmann::ordered_json suite_detail_json(const SuiteOutcome& outcome) {
  nlohmann::ordered_json doc;
  doc["feature"] = feature_name(outcome.feature);
  switch (outcome.status) {
    case SuiteStatus::Scored: doc["status"] = "scored"; break;
    case SuiteStatus::ToolFailed: doc["status"] = "tool-failed"; break;
    case SuiteStatus::CorruptedOutput: doc["status"] = "corrupted-output"; break;
  }
  if (!outcome.error.empty()) doc["error"] = outcome.error;
  doc["diagnostics"] = nlohmann::ordered_json::array();
  for (const auto& d : outcome.diagnostics)
    doc["diagnostics"].push_back(
        {{"entry", d.entry_path}, {"message", d.message}});
  if (outcome.exec_hook_exit)
    doc["exec_hook_exit"] = *outcome.exec_hook_exit;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : outcome.rows) doc["rows"].push_back(report_row_json(row));
  doc["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : outcome.cases) {
    nlohmann::ordered_json case_doc;
    case_doc["id"] = c.id;
    case_doc["technique"] = c.technique;
    case_doc["levels"] = nlohmann::ordered_json::object();
    for (const auto& l : c.levels) {
      nlohmann::ordered_json level_doc = counts_json(l.counts);
      if (l.counts_excluding_corrupted)
        level_doc["excluding_corrupted"] =
            counts_json(*l.counts_excluding_corrupted);
      case_doc["levels"][level_name(l.level)] = std::move(level_doc);
    }
    doc["cases"].push_back(std::move(case_doc));
  }
  return doc;
}

// Debloats one generated suite per the configuration; returns the debloated
// archive or records a failure in `outcome`.
inline std::optional<JarArchive> obtain_debloated(
    const RunConfig& config, const FeatureSuite& suite,
    const std::filesystem::path& bloated_path,
    const std::filesystem::path& debloated_path, SuiteOutcome& outcome) {
  if (config.tool == ToolKind::Builtin) {
    ShrinkPolicy policy = config.policy;
    if (config.use_suite_seeds)
      policy.reflection_seeds.insert(policy.reflection_seeds.end(),
                                     suite.seeds.begin(), suite.seeds.end());
    ReachabilitySet live =
        config.oracle
            ? reachability_from_truth(suite.jar, suite.merged_truth)
            : compute_reachable(suite.jar, {suite.entry_class}, policy);
    return apply_debloat(suite.jar, live, policy);
  }
  // External tool: materialize input, substitute, execute, read output.
  std::string command = substitute(config.external_command, "{input}",
                                   bloated_path.string());
  command = substitute(command, "{output}", debloated_path.string());
  std::error_code ec;
  std::filesystem::remove(debloated_path, ec);
  int exit_code = run_command(command);
  if (exit_code != 0) {
    outcome.status = SuiteStatus::ToolFailed;
    outcome.error = "external command exited with status " +
                    std::to_string(exit_code) + ": " + command;
    return std::nullopt;
  }
  // A tool that produces no output "removed nothing": the original bloated
  // JAR is treated as its result.
  if (!std::filesystem::exists(debloated_path) ||
      std::filesystem::file_size(debloated_path) == 0)
    return suite.jar;
  try {
    return read_jar(read_binary_file(debloated_path));
  } catch (const ArchiveError& e) {
    outcome.status = SuiteStatus::CorruptedOutput;
    outcome.error = e.what();
    return std::nullopt;
  }
}

inline SuiteOutcome evaluate_suite(const RunConfig& config,
                                   const FeatureSuite& suite,
                                   const std::filesystem::path& bloated_path,
                                   const std::filesystem::path& debloated_path) {
  SuiteOutcome outcome;
  outcome.feature = suite.feature;

  std::optional<JarArchive> debloated =
      obtain_debloated(config, suite, bloated_path, debloated_path, outcome);
  if (!debloated) return outcome;

  if (config.tool == ToolKind::Builtin)
    write_binary_file(debloated_path, write_jar(*debloated));

  Inventory inv;
  try {
    inv = extract_inventory(*debloated, config.lenient
                                            ? InventoryPolicy::Lenient
                                            : InventoryPolicy::Strict);
  } catch (const CorruptedClassEntry& e) {
    outcome.status = SuiteStatus::CorruptedOutput;
    outcome.error = e.what();
    return outcome;
  }
  outcome.diagnostics = inv.diagnostics;

  // Corrupted entries under lenient parsing: the alternate view excludes
  // those classes' constructs from the universe instead of counting them
  // missing.
  std::optional<GroundTruth> merged_excluding;
  std::set<ConstructRef> corrupted_classes;
  if (!inv.diagnostics.empty()) {
    for (const auto& d : inv.diagnostics) {
      std::string binary = d.entry_path.substr(0, d.entry_path.size() - 6);
      auto split = split_binary_name(binary);
      corrupted_classes.insert(
          ConstructRef::cls(split.package, split.simple_name));
    }
    merged_excluding = subtract_classes(suite.merged_truth, corrupted_classes);
  }

  for (Level level : {Level::Class, Level::Method, Level::Field}) {
    if (suite.merged_truth.at(level).absent) continue;
    ReportRow row = build_report_row(feature_name(suite.feature), level,
                                     classify(suite.merged_truth, inv, level));
    outcome.rows.push_back(std::move(row));
  }
  for (const auto& test_case : suite.test_cases) {
    CaseOutcome case_outcome;
    case_outcome.id = test_case.id;
    case_outcome.technique = test_case.technique;
    for (Level level : {Level::Class, Level::Method, Level::Field}) {
      if (test_case.truth.at(level).absent) continue;
      LevelOutcome lo;
      lo.level = level;
      lo.counts = classify(test_case.truth, inv, level);
      // Per-case unknown counts are suite-wide noise; report constructs
      // outside the whole suite universe instead.
      Counts suite_wide = classify(suite.merged_truth, inv, level);
      lo.counts.unknown_retained = suite_wide.unknown_retained;
      if (merged_excluding) {
        GroundTruth case_excluding =
            subtract_classes(test_case.truth, corrupted_classes);
        lo.counts_excluding_corrupted =
            classify(case_excluding, inv, level);
      }
      case_outcome.levels.push_back(std::move(lo));
    }
    outcome.cases.push_back(std::move(case_outcome));
  }

  if (!config.exec_hook.empty()) {
    std::string command =
        substitute(config.exec_hook, "{jar}", debloated_path.string());
    outcome.exec_hook_exit = run_command(command);
  }
  return outcome;
}

}  // namespace detail

/// Runs the pipeline per the configuration; writes report artifacts, the
/// bloated and debloated JARs and per-suite detail JSON under out_dir.
inline RunResult run_pipeline(const RunConfig& config) {
  config.validate();
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir / "bloated");
  fs::create_directories(config.out_dir / "debloated");
  fs::create_directories(config.out_dir / "details");

  std::vector<Feature> selected =
      config.suites.empty()
          ? std::vector<Feature>(kAllFeatures.begin(), kAllFeatures.end())
          : config.suites;

  struct Job {
    FeatureSuite suite;
    fs::path bloated_path;
    fs::path debloated_path;
  };
  std::vector<Job> jobs;
  for (Feature f : selected) {
    Job job;
    job.suite = generate_suite(f);
    std::string slug = feature_slug(f);
    job.bloated_path = config.out_dir / "bloated" / (slug + ".jar");
    job.debloated_path = config.out_dir / "debloated" / (slug + ".jar");
    detail::write_binary_file(job.bloated_path, write_jar(job.suite.jar));
    jobs.push_back(std::move(job));
  }

  RunResult result;
  result.suites.resize(jobs.size());
  std::size_t next = 0;
  while (next < jobs.size()) {
    std::size_t batch = std::min<std::size_t>(config.jobs, jobs.size() - next);
    std::vector<std::future<SuiteOutcome>> futures;
    for (std::size_t i = 0; i < batch; ++i) {
      const Job& job = jobs[next + i];
      futures.push_back(std::async(
          batch > 1 ? std::launch::async : std::launch::deferred,
          [&config, &job] {
            return detail::evaluate_suite(config, job.suite, job.bloated_path,
                                          job.debloated_path);
          }));
    }
    for (std::size_t i = 0; i < batch; ++i)
      result.suites[next + i] = futures[i].get();
    next += batch;
  }

  for (const auto& outcome : result.suites) {
    for (const auto& row : outcome.rows) result.rows.push_back(row);
    if (outcome.status == SuiteStatus::ToolFailed)
      result.exit_code = std::max(result.exit_code, kExitToolFailure);
    if (outcome.status == SuiteStatus::CorruptedOutput)
      result.exit_code = std::max(result.exit_code, kExitCorruptedOutput);
    detail::write_text_file(
        config.out_dir / "details" /
            (feature_slug(outcome.feature) + ".json"),
        detail::suite_detail_json(outcome).dump(1) + "\n");
  }

  for (ReportFormat format : config.report_formats) {
    std::string name = std::string("report.") +
                       (format == ReportFormat::Text ? "txt"
                        : format == ReportFormat::Csv ? "csv"
                                                      : "json");
    detail::write_text_file(config.out_dir / name,
                            render_report(result.rows, format));
  }
  return result;
}

}  // namespace deblometer
