#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wealthsim/engine.hpp"
#include "wealthsim/errors.hpp"
#include "wealthsim/rng.hpp"
#include "wealthsim/scenario_io.hpp"

using namespace wealthsim;
using nlohmann::json;

namespace {

json minimal_doc() {
  return json::parse(R"({
    "agents": 1000,
    "model": "baseline",
    "tax": {"kind": "none"},
    "horizon": 100000,
    "seed": 42
  })");
}

ConfigError capture(const json& doc) {
  try {
    parse_scenario(doc);
  } catch (const ConfigError& e) {
    return e;
  }
  REQUIRE(false);
  return ConfigError(ConfigErrorKind::Syntax, "", "unreachable");
}

}  // namespace

TEST_CASE("a minimal scenario resolves to the documented defaults") {
  const Scenario s = parse_scenario(minimal_doc());
  CHECK(s.n_agents == 1000);
  CHECK(s.initial_wealth == 1000.0);
  CHECK(s.exchange_model == ExchangeModel::BaselineAsymmetric);
  CHECK(s.tax_regime.kind == TaxKind::None);
  CHECK(s.redistribution == RedistributionPolicy::ToAll);
  CHECK(s.tax_regime.income_period == 10);
  CHECK(s.tax_regime.wealth_period == 100);
  CHECK(s.horizon == 100000);
  CHECK(s.metrics_every == 100);
  CHECK(s.snapshot_at == std::vector<std::uint64_t>{1000, 10000, 100000});
  CHECK(s.seed == 42);
}

TEST_CASE("default snapshot points are trimmed to the horizon") {
  json doc = minimal_doc();
  doc["horizon"] = 5000;
  const Scenario s = parse_scenario(doc);
  CHECK(s.snapshot_at == std::vector<std::uint64_t>{1000});
}

TEST_CASE("default wealth period is ten income periods") {
  json doc = minimal_doc();
  doc["income_period"] = 7;
  CHECK(parse_scenario(doc).tax_regime.wealth_period == 70);
}

TEST_CASE("a progressive scenario parses its schedule") {
  json doc = minimal_doc();
  doc["tax"] = {{"kind", "progressive_income"},
                {"schedule",
                 {{"r_min", 0.15}, {"r_max", 0.75}, {"y_free", 150.0}, {"y_max", 1550.0}}}};
  const Scenario s = parse_scenario(doc);
  CHECK(s.tax_regime.kind == TaxKind::ProgressiveIncome);
  CHECK(s.tax_regime.schedule == ProgressiveSchedule{0.15, 0.75, 150.0, 1550.0});
}

TEST_CASE("an out-of-range rate names the offending key") {
  json doc = minimal_doc();
  doc["tax"] = {{"kind", "flat_wealth"}, {"rate", 1.5}};
  const ConfigError e = capture(doc);
  CHECK(e.kind() == ConfigErrorKind::OutOfRange);
  CHECK(e.key() == "tax.rate");
}

TEST_CASE("unknown keys are rejected by name") {
  json doc = minimal_doc();
  doc["agnets"] = 12;
  const ConfigError e = capture(doc);
  CHECK(e.kind() == ConfigErrorKind::UnknownKey);
  CHECK(e.key() == "agnets");

  json doc2 = minimal_doc();
  doc2["tax"]["rate"] = 0.3;  // not meaningful for kind "none"
  const ConfigError e2 = capture(doc2);
  CHECK(e2.kind() == ConfigErrorKind::UnknownKey);
  CHECK(e2.key() == "tax.rate");

  json doc3 = minimal_doc();
  doc3["tax"] = {{"kind", "flat_income"},
                 {"rate", 0.3},
                 {"schedule", {{"r_min", 0.1}, {"r_max", 0.2}, {"y_free", 0}, {"y_max", 1}}}};
  const ConfigError e3 = capture(doc3);
  CHECK(e3.kind() == ConfigErrorKind::UnknownKey);
  CHECK(e3.key() == "tax.schedule");
}

TEST_CASE("missing required keys are reported") {
  json doc = minimal_doc();
  doc.erase("seed");
  const ConfigError e = capture(doc);
  CHECK(e.kind() == ConfigErrorKind::MissingKey);
  CHECK(e.key() == "seed");
}

TEST_CASE("type mismatches are reported") {
  json doc = minimal_doc();
  doc["agents"] = "many";
  const ConfigError e = capture(doc);
  CHECK(e.kind() == ConfigErrorKind::BadType);
  CHECK(e.key() == "agents");
}

TEST_CASE("snapshot points beyond the horizon are rejected") {
  json doc = minimal_doc();
  doc["snapshots"] = {1000, 200000};
  const ConfigError e = capture(doc);
  CHECK(e.kind() == ConfigErrorKind::OutOfRange);
  CHECK(e.key() == "snapshots");
}

TEST_CASE("syntax errors report the byte position") {
  try {
    parse_scenario_text("{\"agents\": ");
    REQUIRE(false);
  } catch (const ConfigError& e) {
    CHECK(e.kind() == ConfigErrorKind::Syntax);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("every bundled preset parses and targets the full study horizon") {
  CHECK(presets().size() >= 10);
  for (const Preset& p : presets()) {
    const Scenario s = parse_scenario_text(std::string(p.document));
    CHECK(s.n_agents == 1000);
    CHECK(s.initial_wealth == 1000.0);
    CHECK(s.horizon == 100000);
    CHECK(find_preset(p.name) == &p);
  }
  CHECK(find_preset("no_such_preset") == nullptr);
}

TEST_CASE("scenarios round-trip through serialization losslessly") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Scenario s;
    s.n_agents = 2 + rng.bounded(5000);
    s.initial_wealth = rng.unit_double() * 2000.0;
    s.exchange_model = rng.coin() ? ExchangeModel::KineticSymmetric
                                  : ExchangeModel::BaselineAsymmetric;
    switch (rng.bounded(4)) {
      case 0:
        s.tax_regime.kind = TaxKind::None;
        break;
      case 1:
        s.tax_regime.kind = TaxKind::FlatIncome;
        s.tax_regime.rate = rng.unit_double();
        break;
      case 2: {
        s.tax_regime.kind = TaxKind::ProgressiveIncome;
        const double r_min = rng.unit_double() * 0.5;
        const double y_free = rng.unit_double() * 500.0;
        s.tax_regime.schedule = {r_min, r_min + rng.unit_double() * 0.5, y_free,
                                 y_free + 1.0 + rng.unit_double() * 2000.0};
        break;
      }
      default:
        s.tax_regime.kind = TaxKind::FlatWealth;
        s.tax_regime.rate = rng.unit_double();
        break;
    }
    s.tax_regime.income_period = 1 + rng.bounded(50);
    s.tax_regime.wealth_period = 1 + rng.bounded(500);
    const std::uint64_t policies = rng.bounded(3);
    s.redistribution = policies == 0 ? RedistributionPolicy::ToAll
                       : policies == 1 ? RedistributionPolicy::ToLosers
                                       : RedistributionPolicy::ToBottomHalf;
    s.horizon = rng.bounded(200000);
    s.metrics_every = 1 + rng.bounded(1000);
    s.snapshot_at.clear();
    for (int k = rng.bounded(4); k > 0; --k) s.snapshot_at.push_back(rng.bounded(s.horizon + 1));
    std::sort(s.snapshot_at.begin(), s.snapshot_at.end());
    s.snapshot_at.erase(std::unique(s.snapshot_at.begin(), s.snapshot_at.end()),
                        s.snapshot_at.end());
    s.seed = rng.next_u64();

    CHECK(parse_scenario(scenario_to_json(s)) == s);
    CHECK(parse_scenario_text(scenario_to_json(s).dump()) == s);
  }
}

TEST_CASE("csv numbers are short, exact and reparse to the same bits") {
  CHECK(csv_number(0.0) == "0.0");
  CHECK(csv_number(0.5) == "0.5");
  CHECK(csv_number(0.1) == "0.1");
  CHECK(csv_number(0.01) == "0.01");
  CHECK(csv_number(1000000.0) == "1000000.0");
  CHECK(csv_number(0.999) == "0.999");

  Rng rng(5150);
  for (int trial = 0; trial < 5000; ++trial) {
    double v = rng.unit_double() * std::pow(10.0, static_cast<double>(rng.bounded(13)));
    if (trial % 7 == 0) v = rng.unit_double() * 1e-9;
    const std::string text = csv_number(v);
    CHECK(std::strtod(text.c_str(), nullptr) == v);
  }
}

TEST_CASE("the timeseries writer emits the pinned header and the equal-start row") {
  Scenario s;
  s.horizon = 0;
  s.snapshot_at = {};
  s.seed = 1;
  const RunResult result = run(s);
  std::ostringstream os;
  write_timeseries(result, os);
  CHECK(os.str() ==
        "iteration,gini,share_bottom50,share_top10,share_top1,total_wealth\n"
        "0,0.0,0.5,0.1,0.01,1000000.0\n");
}

TEST_CASE("timeseries rows reparse to the exact frame values") {
  Scenario s;
  s.horizon = 5000;
  s.metrics_every = 500;
  s.snapshot_at = {};
  s.seed = 31337;
  const RunResult result = run(s);
  std::ostringstream os;
  write_timeseries(result, os);

  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "iteration,gini,share_bottom50,share_top10,share_top1,total_wealth");
  for (const MetricsFrame& f : result.frames) {
    REQUIRE(std::getline(in, line));
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    CHECK(std::stoull(field) == f.iteration);
    const double expect[] = {f.gini, f.share_bottom50, f.share_top10, f.share_top1,
                             f.total_wealth};
    for (double e : expect) {
      REQUIRE(std::getline(row, field, ','));
      CHECK(std::strtod(field.c_str(), nullptr) == e);
    }
  }
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("the snapshot writer emits one object per snapshot point") {
  Scenario s;
  s.horizon = 3000;
  s.metrics_every = 1000;
  s.snapshot_at = {0, 1000, 3000};
  s.seed = 7;
  const RunResult result = run(s);
  std::ostringstream os;
  write_snapshots(result, os);

  const json arr = json::parse(os.str());
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 3);
  CHECK(arr[0]["iteration"] == 0);
  CHECK(arr[1]["iteration"] == 1000);
  CHECK(arr[2]["iteration"] == 3000);
  for (const auto& snap : arr) {
    REQUIRE(snap["bin_edges"].size() == 11);
    REQUIRE(snap["counts"].size() == 10);
    std::uint64_t total = 0;
    for (const auto& c : snap["counts"]) total += c.get<std::uint64_t>();
    CHECK(total == 1000);
  }
}
