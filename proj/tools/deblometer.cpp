// deblometer -- benchmark toolkit for JVM debloating tools. Subcommands:
//   generate   write the bloated suite corpus with ground truths
//   debloat    run the built-in shrinker over one JAR
//   validate   check a bloated JAR against a ground-truth document
//   run        full pipeline: generate, debloat, score, report
//   report     re-render a previous run's rows in another format
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "deblometer/benchgen.hpp"
#include "deblometer/pipeline.hpp"

namespace fs = std::filesystem;
using namespace deblometer;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

Bytes slurp_bytes(const fs::path& path) {
  std::string text = slurp(path);
  return Bytes(text.begin(), text.end());
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void spit_bytes(const fs::path& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

std::set<Level> parse_levels(const std::string& csv) {
  std::set<Level> levels;
  for (const auto& name : split_param_string(csv)) {
    if (name == "class") levels.insert(Level::Class);
    else if (name == "method") levels.insert(Level::Method);
    else if (name == "field") levels.insert(Level::Field);
    else throw ConfigError("unknown level: " + name);
  }
  return levels;
}

ConstructRef class_ref_from_dotted(const std::string& dotted) {
  std::size_t dot = dotted.rfind('.');
  if (dot == std::string::npos) return ConstructRef::cls("", dotted);
  return ConstructRef::cls(dotted.substr(0, dot), dotted.substr(dot + 1));
}

std::string out_dir_default(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("DEBLOMETER_OUT")) return env;
  return "deblometer-out";
}

int cmd_generate(const std::string& out_flag,
                 const std::vector<std::string>& suite_names) {
  std::vector<FeatureSuite> suites;
  if (suite_names.empty()) {
    suites = generate_all();
  } else {
    for (const auto& name : suite_names)
      suites.push_back(generate_suite(feature_from_name(name)));
  }
  fs::path out = out_dir_default(out_flag);
  write_corpus(suites, out);
  std::size_t cases = 0;
  for (const auto& s : suites) cases += s.test_cases.size();
  std::cout << "wrote " << suites.size() << " suite(s), " << cases
            << " test case(s) to " << out.string() << "\n";
  return kExitOk;
}

int cmd_debloat(const std::string& in_path, const std::string& out_path,
                const std::string& policy_path, const std::string& mode,
                const std::string& levels_csv, const std::string& seeds_path,
                const std::string& entry_dotted,
                const std::string& oracle_truth_path) {
  ShrinkPolicy policy = mode == "aggressive" ? ShrinkPolicy::aggressive()
                                             : ShrinkPolicy::conservative();
  if (!policy_path.empty()) policy = parse_policy_json(slurp(policy_path));
  if (!levels_csv.empty()) policy.levels = parse_levels(levels_csv);
  if (!seeds_path.empty()) {
    auto seeds = parse_seeds_json(slurp(seeds_path));
    policy.reflection_seeds.insert(policy.reflection_seeds.end(),
                                   seeds.begin(), seeds.end());
  }

  JarArchive jar = read_jar(slurp_bytes(in_path));
  ReachabilitySet live;
  if (!oracle_truth_path.empty()) {
    GroundTruth truth = parse_ground_truth(slurp(oracle_truth_path));
    live = reachability_from_truth(jar, truth);
  } else {
    std::string entry = entry_dotted;
    if (entry.empty()) {
      auto main_class = jar.manifest.main_class();
      if (!main_class)
        throw ConfigError(
            "input has no Main-Class manifest entry; pass --entry");
      entry = *main_class;
    }
    live = compute_reachable(jar, {class_ref_from_dotted(entry)}, policy);
  }
  JarArchive debloated = apply_debloat(jar, live, policy);
  spit_bytes(out_path, write_jar(debloated));
  std::cout << "kept " << live.live_classes.size() << " class(es), "
            << live.live_methods.size() << " method(s), "
            << live.live_fields.size() << " field(s); wrote " << out_path
            << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& jar_path, const std::string& truth_path,
                 bool lenient) {
  JarArchive jar = read_jar(slurp_bytes(jar_path));
  GroundTruth truth = parse_ground_truth(slurp(truth_path));
  Inventory inv = extract_inventory(
      jar, lenient ? InventoryPolicy::Lenient : InventoryPolicy::Strict);
  for (const auto& d : inv.diagnostics)
    std::cout << "diagnostic: " << d.entry_path << ": " << d.message << "\n";
  CompletenessReport report = validate_against_fixture(truth, inv);
  if (report.clean()) {
    std::cout << "clean: inventory equals required + bloated at every "
                 "evaluated level\n";
    return kExitOk;
  }
  std::cout << report.summary();
  return 1;
}

int cmd_run(const std::string& config_path,
            const std::vector<std::string>& suite_names,
            const std::string& tool, const std::string& external_command,
            const std::string& mode, const std::string& levels_csv,
            const std::string& seeds_path, bool use_suite_seeds, bool oracle,
            bool lenient, const std::vector<std::string>& formats,
            const std::string& out_flag, const std::string& exec_hook,
            unsigned jobs) {
  RunConfig config;
  if (!config_path.empty()) config = parse_run_config_json(slurp(config_path));
  for (const auto& name : suite_names)
    config.suites.push_back(feature_from_name(name));
  if (!tool.empty())
    config.tool = tool == "external" ? ToolKind::External : ToolKind::Builtin;
  if (!external_command.empty()) {
    config.external_command = external_command;
    config.tool = ToolKind::External;
  }
  if (!mode.empty()) {
    bool keep_seeds_and_levels = true;
    ShrinkPolicy fresh = mode == "aggressive" ? ShrinkPolicy::aggressive()
                                              : ShrinkPolicy::conservative();
    if (keep_seeds_and_levels) {
      fresh.levels = config.policy.levels;
      fresh.reflection_seeds = config.policy.reflection_seeds;
    }
    config.policy = fresh;
  }
  if (!levels_csv.empty()) config.policy.levels = parse_levels(levels_csv);
  if (!seeds_path.empty()) {
    auto seeds = parse_seeds_json(slurp(seeds_path));
    config.policy.reflection_seeds.insert(config.policy.reflection_seeds.end(),
                                          seeds.begin(), seeds.end());
  }
  if (use_suite_seeds) config.use_suite_seeds = true;
  if (oracle) config.oracle = true;
  if (lenient) config.lenient = true;
  if (!formats.empty()) {
    config.report_formats.clear();
    for (const auto& name : formats)
      config.report_formats.insert(report_format_from_name(name));
  }
  if (const char* env = std::getenv("DEBLOMETER_OUT"))
    config.out_dir = env;
  if (!out_flag.empty()) config.out_dir = out_flag;
  if (config.out_dir.empty()) config.out_dir = "deblometer-out";
  if (!exec_hook.empty()) config.exec_hook = exec_hook;
  if (jobs != 0) config.jobs = jobs;

  RunResult result = run_pipeline(config);
  std::cout << render_report(result.rows, ReportFormat::Text);
  for (const auto& outcome : result.suites) {
    if (outcome.status == SuiteStatus::ToolFailed)
      std::cout << "suite " << feature_name(outcome.feature)
                << ": tool failed: " << outcome.error << "\n";
    if (outcome.status == SuiteStatus::CorruptedOutput)
      std::cout << "suite " << feature_name(outcome.feature)
                << ": corrupted output: " << outcome.error << "\n";
    for (const auto& d : outcome.diagnostics)
      std::cout << "suite " << feature_name(outcome.feature)
                << ": diagnostic: " << d.entry_path << ": " << d.message
                << "\n";
  }
  std::cout << "artifacts under " << config.out_dir.string() << "\n";
  return result.exit_code;
}

int cmd_report(const std::string& from_path, const std::string& format_name,
               const std::string& out_path) {
  std::string text = slurp(from_path);
  std::vector<ReportRow> rows;
  if (from_path.size() > 4 &&
      from_path.substr(from_path.size() - 4) == ".csv")
    rows = parse_report_csv(text);
  else
    rows = parse_report_json(text);
  std::string rendered =
      render_report(rows, report_format_from_name(format_name));
  if (out_path.empty())
    std::cout << rendered;
  else
    spit(out_path, rendered);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deblometer: soundness/precision benchmark toolkit for JVM "
               "debloating tools"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand(
      "generate", "Write the bloated suite corpus with ground truths");
  std::string gen_out;
  std::vector<std::string> gen_suites;
  generate->add_option("--out", gen_out,
                       "Output directory (default: $DEBLOMETER_OUT or "
                       "./deblometer-out)");
  generate->add_option("--suite", gen_suites,
                       "Feature selection (repeatable; default: all)");

  // debloat
  auto* debloat = app.add_subcommand(
      "debloat", "Debloat one JAR with the built-in shrinker");
  std::string deb_in, deb_out, deb_policy, deb_mode, deb_levels, deb_seeds,
      deb_entry, deb_oracle;
  debloat->add_option("--in", deb_in, "Input JAR")->required();
  debloat->add_option("--out", deb_out, "Output JAR")->required();
  debloat->add_option("--policy", deb_policy, "Policy JSON file");
  debloat->add_option("--mode", deb_mode, "conservative|aggressive")
      ->check(CLI::IsMember({"conservative", "aggressive"}));
  debloat->add_option("--levels", deb_levels,
                      "Comma list of class,method,field");
  debloat->add_option("--seeds", deb_seeds, "Reflection seeds JSON file");
  debloat->add_option("--entry", deb_entry,
                      "Entry class (dotted); default: manifest Main-Class");
  debloat->add_option("--oracle-truth", deb_oracle,
                      "Ground-truth JSON; keep exactly its required sets");

  // validate
  auto* validate = app.add_subcommand(
      "validate", "Check a bloated JAR against its ground truth");
  std::string val_jar, val_truth;
  bool val_lenient = false;
  validate->add_option("--jar", val_jar, "Bloated JAR")->required();
  validate->add_option("--truth", val_truth, "Ground-truth JSON")->required();
  validate->add_flag("--lenient", val_lenient,
                     "Diagnose corrupted entries instead of failing");

  // run
  auto* run = app.add_subcommand(
      "run", "Full pipeline: generate, debloat, score, report");
  std::string run_config, run_tool, run_external, run_mode, run_levels,
      run_seeds, run_out, run_hook;
  std::vector<std::string> run_suites, run_formats;
  bool run_use_suite_seeds = false, run_oracle = false, run_lenient = false;
  unsigned run_jobs = 0;
  run->add_option("--config", run_config, "Run configuration JSON file");
  run->add_option("--suite", run_suites, "Feature selection (repeatable)");
  run->add_option("--tool", run_tool, "builtin|external")
      ->check(CLI::IsMember({"builtin", "external"}));
  run->add_option("--external-command", run_external,
                  "Tool command with {input} and {output}");
  run->add_option("--mode", run_mode, "conservative|aggressive")
      ->check(CLI::IsMember({"conservative", "aggressive"}));
  run->add_option("--levels", run_levels, "Comma list of class,method,field");
  run->add_option("--seeds", run_seeds, "Reflection seeds JSON file");
  run->add_flag("--use-suite-seeds", run_use_suite_seeds,
                "Merge each suite's published string-target seeds");
  run->add_flag("--oracle", run_oracle,
                "Built-in oracle mode: keep exactly the required sets");
  run->add_flag("--lenient", run_lenient, "Lenient inventory extraction");
  run->add_option("--format", run_formats, "text|csv|json (repeatable)");
  run->add_option("--out", run_out, "Output directory");
  run->add_option("--exec-hook", run_hook,
                  "Command run per debloated JAR; {jar} placeholder");
  run->add_option("--jobs", run_jobs, "Parallel suite workers");

  // report
  auto* report = app.add_subcommand(
      "report", "Re-render a previous run's rows in another format");
  std::string rep_from, rep_format = "text", rep_out;
  report->add_option("--from", rep_from, "report.json or report.csv")
      ->required();
  report->add_option("--format", rep_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  report->add_option("--out", rep_out, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(gen_out, gen_suites);
    if (debloat->parsed())
      return cmd_debloat(deb_in, deb_out, deb_policy, deb_mode, deb_levels,
                         deb_seeds, deb_entry, deb_oracle);
    if (validate->parsed()) return cmd_validate(val_jar, val_truth, val_lenient);
    if (run->parsed())
      return cmd_run(run_config, run_suites, run_tool, run_external, run_mode,
                     run_levels, run_seeds, run_use_suite_seeds, run_oracle,
                     run_lenient, run_formats, run_out, run_hook, run_jobs);
    if (report->parsed()) return cmd_report(rep_from, rep_format, rep_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ShrinkError& e) {
    if (e.kind == ShrinkErrorKind::ConfigError) {
      std::cerr << "config error: " << e.what() << "\n";
      return kExitConfig;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CorruptedClassEntry& e) {
    std::cerr << "corrupted input: " << e.what() << "\n";
    return kExitCorruptedOutput;
  } catch (const TruthError& e) {
    std::cerr << "ground-truth error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
