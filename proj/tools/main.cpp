#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "wealthsim/engine.hpp"
#include "wealthsim/errors.hpp"
#include "wealthsim/scenario_io.hpp"
#include "wealthsim/sweep.hpp"

namespace {

namespace fs = std::filesystem;
using namespace wealthsim;

// Exit codes: 0 ok, 2 configuration/usage error, 3 I/O error, 4 internal.
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

std::string default_out_dir() {
  if (const char* env = std::getenv("WEALTHSIM_OUT")) return env;
  return "out";
}

// Scenario argument: a file path first, a bundled preset name second.
Scenario resolve_scenario(const std::string& arg) {
  if (fs::exists(arg)) return load_scenario(arg);
  if (const Preset* p = find_preset(arg)) return parse_scenario_text(std::string(p->document));
  throw ConfigError(ConfigErrorKind::MissingKey, "scenario",
                    "no scenario file or preset named '" + arg + "'");
}

void print_frame(const MetricsFrame& f) {
  std::cout << "  iteration " << f.iteration << ": gini " << csv_number(f.gini)
            << ", bottom50 " << csv_number(f.share_bottom50) << ", top10 "
            << csv_number(f.share_top10) << ", top1 " << csv_number(f.share_top1)
            << ", total " << csv_number(f.total_wealth) << "\n";
}

int cmd_run(const std::string& scenario_arg, std::optional<std::uint64_t> seed,
            const std::string& out_dir) {
  Scenario scenario = resolve_scenario(scenario_arg);
  if (seed) scenario.seed = *seed;

  const RunResult result = run(scenario);

  const fs::path dir = out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());
  write_timeseries(result, dir / "timeseries.csv");
  write_snapshots(result, dir / "snapshots.json");
  write_run_meta(result, dir / "run.json");

  std::cout << "wrote " << (dir / "timeseries.csv").string() << " ("
            << result.frames.size() << " frames, " << result.snapshots.size()
            << " snapshots)\n";
  print_frame(result.frames.back());
  return 0;
}

int cmd_sweep(const std::string& sweep_file, unsigned parallelism, const std::string& out_dir) {
  const SweepSpec spec = load_sweep(sweep_file);
  const SweepSummary summary = run_sweep(spec, parallelism, out_dir);
  std::cout << "completed " << summary.runs.size() << " runs, " << summary.failures
            << " failed; summary at " << (fs::path(out_dir) / "summary.csv").string() << "\n";
  return summary.failures == 0 ? 0 : kExitConfig;
}

int cmd_presets_list() {
  for (const Preset& p : presets())
    std::cout << p.name << "\t" << p.summary << "\n";
  return 0;
}

int cmd_validate(const std::string& scenario_arg) {
  const Scenario scenario = resolve_scenario(scenario_arg);
  std::cout << "OK: " << scenario_to_json(scenario).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise wealth-exchange economy simulator"};
  app.require_subcommand(1);

  std::string scenario_arg;
  std::optional<std::uint64_t> seed;
  std::string out_dir = default_out_dir();
  auto* run_cmd = app.add_subcommand("run", "Execute one scenario");
  run_cmd->add_option("scenario", scenario_arg, "Scenario file or preset name")->required();
  run_cmd->add_option("--seed", seed, "Override the scenario seed");
  run_cmd->add_option("--out", out_dir, "Output directory (default: $WEALTHSIM_OUT or ./out)");

  std::string sweep_file;
  std::string sweep_out = default_out_dir();
  unsigned parallelism = std::thread::hardware_concurrency();
  auto* sweep_cmd = app.add_subcommand("sweep", "Execute a parameter sweep");
  sweep_cmd->add_option("sweep", sweep_file, "Sweep file")->required();
  sweep_cmd->add_option("--parallel", parallelism,
                        "Worker threads (default: hardware concurrency)");
  sweep_cmd->add_option("--out", sweep_out, "Output directory (default: $WEALTHSIM_OUT or ./out)");

  auto* presets_cmd = app.add_subcommand("presets", "Bundled scenarios");
  auto* list_cmd = presets_cmd->add_subcommand("list", "List bundled scenario presets");
  presets_cmd->require_subcommand(1);

  std::string validate_arg;
  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario file");
  validate_cmd->add_option("scenario", validate_arg, "Scenario file or preset name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(scenario_arg, seed, out_dir);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_file, parallelism, sweep_out);
    if (list_cmd->parsed()) return cmd_presets_list();
    if (validate_cmd->parsed()) return cmd_validate(validate_arg);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitConfig;
}
