#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wealthsim/engine.hpp"
#include "wealthsim/errors.hpp"

namespace wealthsim {

// Builds a fully resolved scenario from a JSON document. Unknown keys are
// rejected; validation errors carry the dotted path of the offending key.
Scenario parse_scenario(const nlohmann::json& doc);

// Same, from raw text; syntax errors report the byte position.
Scenario parse_scenario_text(const std::string& text);

Scenario load_scenario(const std::filesystem::path& file);

// Emits every resolved field; parse_scenario(scenario_to_json(s)) == s.
nlohmann::json scenario_to_json(const Scenario& s);

// Shortest decimal form that reparses to the exact same double. Fixed
// notation with a ".0" suffix for integral values; scientific only for
// extreme magnitudes.
std::string csv_number(double v);

// CSV with the fixed header
//   iteration,gini,share_bottom50,share_top10,share_top1,total_wealth
// one row per metrics frame, LF line endings.
void write_timeseries(const RunResult& result, std::ostream& os);
void write_timeseries(const RunResult& result, const std::filesystem::path& file);

// JSON array of {iteration, bin_edges, counts} objects, one per snapshot.
void write_snapshots(const RunResult& result, std::ostream& os);
void write_snapshots(const RunResult& result, const std::filesystem::path& file);

// Reproducibility sidecar: resolved scenario, RNG stream id, final frame.
void write_run_meta(const RunResult& result, const std::filesystem::path& file);

struct Preset {
  std::string_view name;
  std::string_view summary;
  std::string_view document;  // scenario JSON text
};

// Bundled ready-to-run scenarios covering the studied regimes.
std::span<const Preset> presets();
const Preset* find_preset(std::string_view name);

}  // namespace wealthsim
