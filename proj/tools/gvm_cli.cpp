// Command-line front end: list suites, run the verification battery, dump fixtures.
//
// Exit codes: 0 pass, 1 certified violation, 2 configuration or usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gvm.hpp"

namespace {

using namespace gvm;
using namespace gvm::harness;

std::string resolve_out(const std::string& out) {
  namespace fs = std::filesystem;
  fs::path p(out);
  if (p.has_parent_path() || p.is_absolute()) return out;
  return (fs::path(default_report_dir()) / p).string();
}

int cmd_run(const std::string& config_path, const std::optional<std::uint64_t>& seed,
            const std::vector<std::string>& suites, const std::string& format, const std::string& out,
            const std::optional<int>& trials, const std::optional<int>& jobs, const std::string& fault) {
  RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
  if (seed) cfg.seed = *seed;
  if (!suites.empty()) cfg.suites = suites;
  if (trials) cfg.trials = *trials;
  if (jobs) cfg.jobs = *jobs;
  if (!fault.empty()) cfg.fault = parse_fault(fault);
  if (format == "json") cfg.format = ReportFormat::Json;
  else if (format == "markdown" || format == "md") cfg.format = ReportFormat::Markdown;
  else if (!format.empty()) throw ConfigError("unknown format '" + format + "'");
  if (!out.empty()) cfg.out = out;
  cfg.validate();

  auto reps = run_suites(cfg);
  std::string text = cfg.format == ReportFormat::Json ? to_json(reps, cfg).dump(2) + "\n" : to_markdown(reps, cfg);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    auto path = resolve_out(cfg.out);
    std::ofstream f(path);
    if (!f || !(f << text)) throw ConfigError("cannot write report to '" + path + "'");
    std::cerr << "report written to " << path << "\n";
  }
  for (const auto& r : reps)
    std::cerr << r.suite << ": " << r.instances << " instances, " << r.violations << " violations, "
              << r.near_misses << " near-misses\n";
  return exit_code(reps);
}

int cmd_fixtures(const std::string& group, const std::string& measure, const std::string& space, std::uint64_t seed) {
  std::vector<std::string> names = group.empty() ? builtin_group_names() : std::vector<std::string>{group};
  if (!measure.empty()) {
    if (names.size() != 1) throw ConfigError("--measure needs a single --group");
    auto g = build_group(names[0]);
    auto nu = generate_fixture(parse_fixture_kind(measure), g, parse_space(space), seed);
    io::write_measure(std::cout, nu, names[0]);
    return 0;
  }
  for (const auto& n : names) {
    auto g = build_group(n);
    std::cout << "# group " << n << "\n";
    io::write_group_table(std::cout, *g);
    std::cout << "# dual " << n << "\n";
    io::write_dual_table(std::cout, *unitary_dual(g));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis and convolution of vector measures on finite groups"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List verification suites");

  auto* run = app.add_subcommand("run", "Run verification suites and emit a report");
  std::string config_path, format, out, fault;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials, jobs;
  std::vector<std::string> suites;
  run->add_option("--config", config_path, "Config file (key = value lines)");
  run->add_option("--seed", seed, "Base seed");
  run->add_option("--suite", suites, "Suite id (repeatable)");
  run->add_option("--format", format, "json or markdown");
  run->add_option("--out", out, "Report path (bare names go to $GVM_REPORT_DIR)");
  run->add_option("--trials", trials, "Trials per suite (0: suite defaults)");
  run->add_option("--jobs", jobs, "Suites run concurrently");
  run->add_option("--fault", fault, "Inject a fault: drop-dim-conv6, drop-dim-conv8, drop-inv-dim-ft, perturbed-irrep");

  auto* fixtures = app.add_subcommand("fixtures", "Dump built-in group tables and duals, or a generated measure");
  std::string group, measure, space = "linf:2";
  std::uint64_t fseed = 1;
  fixtures->add_option("--group", group, "Group descriptor (default: all built-ins)");
  fixtures->add_option("--measure", measure, "haar-like, random-gaussian, point-mass or translation-invariant");
  fixtures->add_option("--space", space, "Coefficient space for --measure");
  fixtures->add_option("--seed", fseed, "Seed for --measure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (const auto& s : suite_catalog()) std::cout << s.id << "\t" << s.anchor << "\n";
      return 0;
    }
    if (*run) return cmd_run(config_path, seed, suites, format, out, trials, jobs, fault);
    if (*fixtures) return cmd_fixtures(group, measure, space, fseed);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
