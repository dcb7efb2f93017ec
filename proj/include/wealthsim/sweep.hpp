#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "wealthsim/metrics.hpp"

namespace wealthsim {

struct SweepAxis {
  std::string key_path;                // dotted path into the scenario document
  std::vector<nlohmann::json> values;  // applied in listed order
};

struct SweepSpec {
  nlohmann::json base;          // scenario document the axes are applied to
  std::vector<SweepAxis> axes;  // sorted by key path
  std::vector<std::uint64_t> seeds;
  std::size_t max_runs = 10000;
};

// Sweep document: {"base": {...}, "axes": {"tax.rate": [...]}, "seeds": ...}
// where seeds is either an explicit array or {"count": C, "base_seed": B}.
// The combination count (axis product x seeds) must not exceed max_runs.
SweepSpec parse_sweep(const nlohmann::json& doc);
SweepSpec parse_sweep_text(const std::string& text);
SweepSpec load_sweep(const std::filesystem::path& file);

struct SweepRunRecord {
  std::string name;  // output directory name, encodes axis values and seed
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;         // set when ok is false
  MetricsFrame final_frame;  // valid when ok
};

struct SweepSummary {
  std::vector<SweepRunRecord> runs;  // in enumeration order
  std::size_t failures = 0;
};

// Executes every combination, writing per-run outputs under
// out_dir/<name>/{timeseries.csv, snapshots.json, run.json} and an overall
// out_dir/summary.csv. Individual run failures are recorded in the summary
// without aborting the sweep. Outputs are byte-identical for any parallelism.
SweepSummary run_sweep(const SweepSpec& spec, unsigned parallelism,
                       const std::filesystem::path& out_dir);

}  // namespace wealthsim
