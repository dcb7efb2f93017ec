#include "wealthsim/scenario_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace wealthsim {

using nlohmann::json;

namespace {

std::string joined(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown_keys(const json& obj, const std::string& prefix,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (item.key() == a) {
        known = true;
        break;
      }
    if (!known)
      throw ConfigError(ConfigErrorKind::UnknownKey, joined(prefix, item.key()),
                        "unknown key '" + joined(prefix, item.key()) + "'");
  }
}

const json& require_key(const json& obj, const std::string& prefix, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ConfigError(ConfigErrorKind::MissingKey, joined(prefix, key),
                      "missing required key '" + joined(prefix, key) + "'");
  return *it;
}

void forbid_key(const json& obj, const std::string& prefix, const char* key,
                const std::string& reason) {
  if (obj.contains(key))
    throw ConfigError(ConfigErrorKind::UnknownKey, joined(prefix, key),
                      "key '" + joined(prefix, key) + "' is not allowed " + reason);
}

std::uint64_t as_uint(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    const auto x = v.get<std::int64_t>();
    if (x < 0)
      throw ConfigError(ConfigErrorKind::OutOfRange, path, "'" + path + "' must be >= 0");
    return static_cast<std::uint64_t>(x);
  }
  throw ConfigError(ConfigErrorKind::BadType, path, "'" + path + "' must be an integer");
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number())
    throw ConfigError(ConfigErrorKind::BadType, path, "'" + path + "' must be a number");
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string())
    throw ConfigError(ConfigErrorKind::BadType, path, "'" + path + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t uint_or(const json& obj, const std::string& prefix, const char* key,
                      std::uint64_t fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : as_uint(*it, joined(prefix, key));
}

[[noreturn]] void out_of_range(const std::string& path, const std::string& what) {
  throw ConfigError(ConfigErrorKind::OutOfRange, path, "'" + path + "' " + what);
}

double fraction(const json& v, const std::string& path) {
  const double x = as_number(v, path);
  if (!std::isfinite(x) || x < 0.0 || x > 1.0) out_of_range(path, "must lie in [0, 1]");
  return x;
}

TaxRegime parse_tax(const json& doc, std::uint64_t income_period, std::uint64_t wealth_period) {
  if (!doc.is_object())
    throw ConfigError(ConfigErrorKind::BadType, "tax", "'tax' must be an object");
  reject_unknown_keys(doc, "tax", {"kind", "rate", "schedule"});

  TaxRegime tax;
  tax.income_period = income_period;
  tax.wealth_period = wealth_period;

  const std::string kind = as_string(require_key(doc, "tax", "kind"), "tax.kind");
  if (kind == "none")
    tax.kind = TaxKind::None;
  else if (kind == "flat_income")
    tax.kind = TaxKind::FlatIncome;
  else if (kind == "progressive_income")
    tax.kind = TaxKind::ProgressiveIncome;
  else if (kind == "flat_wealth")
    tax.kind = TaxKind::FlatWealth;
  else
    out_of_range("tax.kind",
                 "must be one of none, flat_income, progressive_income, flat_wealth");

  if (tax.kind == TaxKind::FlatIncome || tax.kind == TaxKind::FlatWealth) {
    tax.rate = fraction(require_key(doc, "tax", "rate"), "tax.rate");
    forbid_key(doc, "tax", "schedule", "for tax.kind '" + kind + "'");
  } else if (tax.kind == TaxKind::ProgressiveIncome) {
    forbid_key(doc, "tax", "rate", "for tax.kind '" + kind + "'");
    const json& sched = require_key(doc, "tax", "schedule");
    if (!sched.is_object())
      throw ConfigError(ConfigErrorKind::BadType, "tax.schedule",
                        "'tax.schedule' must be an object");
    reject_unknown_keys(sched, "tax.schedule", {"r_min", "r_max", "y_free", "y_max"});
    ProgressiveSchedule& p = tax.schedule;
    p.r_min = fraction(require_key(sched, "tax.schedule", "r_min"), "tax.schedule.r_min");
    p.r_max = fraction(require_key(sched, "tax.schedule", "r_max"), "tax.schedule.r_max");
    if (p.r_max < p.r_min) out_of_range("tax.schedule.r_max", "must be >= r_min");
    p.y_free = as_number(require_key(sched, "tax.schedule", "y_free"), "tax.schedule.y_free");
    if (!std::isfinite(p.y_free) || p.y_free < 0.0)
      out_of_range("tax.schedule.y_free", "must be finite and >= 0");
    p.y_max = as_number(require_key(sched, "tax.schedule", "y_max"), "tax.schedule.y_max");
    if (!std::isfinite(p.y_max) || p.y_max <= p.y_free)
      out_of_range("tax.schedule.y_max", "must be > y_free");
  } else {
    forbid_key(doc, "tax", "rate", "for tax.kind 'none'");
    forbid_key(doc, "tax", "schedule", "for tax.kind 'none'");
  }
  return tax;
}

}  // namespace

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object())
    throw ConfigError(ConfigErrorKind::BadType, "", "scenario document must be a JSON object");
  reject_unknown_keys(doc, "",
                      {"agents", "initial_wealth", "model", "tax", "redistribution",
                       "income_period", "wealth_period", "horizon", "metrics_every",
                       "snapshots", "seed"});

  Scenario s;

  s.n_agents = static_cast<std::size_t>(as_uint(require_key(doc, "", "agents"), "agents"));
  if (s.n_agents < 2) out_of_range("agents", "must be >= 2");

  if (doc.contains("initial_wealth")) {
    s.initial_wealth = as_number(doc["initial_wealth"], "initial_wealth");
    if (!std::isfinite(s.initial_wealth) || s.initial_wealth < 0.0)
      out_of_range("initial_wealth", "must be finite and >= 0");
  }

  const std::string model = as_string(require_key(doc, "", "model"), "model");
  if (model == "baseline")
    s.exchange_model = ExchangeModel::BaselineAsymmetric;
  else if (model == "kinetic")
    s.exchange_model = ExchangeModel::KineticSymmetric;
  else
    out_of_range("model", "must be 'baseline' or 'kinetic'");

  const std::uint64_t income_period = uint_or(doc, "", "income_period", 10);
  if (income_period < 1) out_of_range("income_period", "must be >= 1");
  const std::uint64_t wealth_period = uint_or(doc, "", "wealth_period", 10 * income_period);
  if (wealth_period < 1) out_of_range("wealth_period", "must be >= 1");

  s.tax_regime = parse_tax(require_key(doc, "", "tax"), income_period, wealth_period);

  if (doc.contains("redistribution")) {
    const std::string r = as_string(doc["redistribution"], "redistribution");
    if (r == "all")
      s.redistribution = RedistributionPolicy::ToAll;
    else if (r == "losers")
      s.redistribution = RedistributionPolicy::ToLosers;
    else if (r == "bottom_half")
      s.redistribution = RedistributionPolicy::ToBottomHalf;
    else
      out_of_range("redistribution", "must be 'all', 'losers' or 'bottom_half'");
  }

  s.horizon = as_uint(require_key(doc, "", "horizon"), "horizon");

  s.metrics_every = uint_or(doc, "", "metrics_every", 100);
  if (s.metrics_every < 1) out_of_range("metrics_every", "must be >= 1");

  if (doc.contains("snapshots")) {
    const json& arr = doc["snapshots"];
    if (!arr.is_array())
      throw ConfigError(ConfigErrorKind::BadType, "snapshots",
                        "'snapshots' must be an array of iteration numbers");
    std::set<std::uint64_t> points;
    for (const auto& v : arr) {
      const std::uint64_t t = as_uint(v, "snapshots");
      if (t > s.horizon) out_of_range("snapshots", "entries must lie in [0, horizon]");
      points.insert(t);
    }
    s.snapshot_at.assign(points.begin(), points.end());
  } else {
    s.snapshot_at.clear();
    for (std::uint64_t t : {std::uint64_t{1000}, std::uint64_t{10000}, std::uint64_t{100000}})
      if (t <= s.horizon) s.snapshot_at.push_back(t);
  }

  s.seed = as_uint(require_key(doc, "", "seed"), "seed");

  validate_scenario(s);
  return s;
}

Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigErrorKind::Syntax, "",
                      "syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::filesystem::path& file) {
  if (std::filesystem::exists(file) && !std::filesystem::is_regular_file(file))
    throw IoError("not a regular file: " + file.string());
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading scenario file: " + file.string());
  return parse_scenario_text(buf.str());
}

json scenario_to_json(const Scenario& s) {
  json tax;
  switch (s.tax_regime.kind) {
    case TaxKind::None:
      tax["kind"] = "none";
      break;
    case TaxKind::FlatIncome:
      tax["kind"] = "flat_income";
      tax["rate"] = s.tax_regime.rate;
      break;
    case TaxKind::ProgressiveIncome: {
      tax["kind"] = "progressive_income";
      const ProgressiveSchedule& p = s.tax_regime.schedule;
      tax["schedule"] = {{"r_min", p.r_min},
                         {"r_max", p.r_max},
                         {"y_free", p.y_free},
                         {"y_max", p.y_max}};
      break;
    }
    case TaxKind::FlatWealth:
      tax["kind"] = "flat_wealth";
      tax["rate"] = s.tax_regime.rate;
      break;
  }

  const char* redistribution = "all";
  if (s.redistribution == RedistributionPolicy::ToLosers) redistribution = "losers";
  if (s.redistribution == RedistributionPolicy::ToBottomHalf) redistribution = "bottom_half";

  return {{"agents", s.n_agents},
          {"initial_wealth", s.initial_wealth},
          {"model", s.exchange_model == ExchangeModel::BaselineAsymmetric ? "baseline"
                                                                          : "kinetic"},
          {"tax", tax},
          {"redistribution", redistribution},
          {"income_period", s.tax_regime.income_period},
          {"wealth_period", s.tax_regime.wealth_period},
          {"horizon", s.horizon},
          {"metrics_every", s.metrics_every},
          {"snapshots", s.snapshot_at},
          {"seed", s.seed}};
}

std::string csv_number(double v) {
  char buf[64];
  const double a = std::abs(v);
  const bool extreme = v != 0.0 && (a < 1e-6 || a >= 1e17);
  const auto res = extreme ? std::to_chars(buf, buf + sizeof buf, v)
                           : std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  std::string s(buf, res.ptr);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) s += ".0";
  return s;
}

void write_timeseries(const RunResult& result, std::ostream& os) {
  os << "iteration,gini,share_bottom50,share_top10,share_top1,total_wealth\n";
  for (const MetricsFrame& f : result.frames)
    os << f.iteration << ',' << csv_number(f.gini) << ',' << csv_number(f.share_bottom50)
       << ',' << csv_number(f.share_top10) << ',' << csv_number(f.share_top1) << ','
       << csv_number(f.total_wealth) << '\n';
}

namespace {

void write_file(const std::filesystem::path& file, auto writer) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw IoError("cannot open output file: " + file.string());
  writer(os);
  os.flush();
  if (!os) throw IoError("failed writing output file: " + file.string());
}

json frame_to_json(const MetricsFrame& f) {
  return {{"iteration", f.iteration},
          {"gini", f.gini},
          {"share_bottom50", f.share_bottom50},
          {"share_top10", f.share_top10},
          {"share_top1", f.share_top1},
          {"total_wealth", f.total_wealth}};
}

}  // namespace

void write_timeseries(const RunResult& result, const std::filesystem::path& file) {
  write_file(file, [&](std::ostream& os) { write_timeseries(result, os); });
}

void write_snapshots(const RunResult& result, std::ostream& os) {
  json arr = json::array();
  for (const HistogramSnapshot& s : result.snapshots)
    arr.push_back(
        {{"iteration", s.iteration}, {"bin_edges", s.bin_edges}, {"counts", s.counts}});
  os << arr.dump(2) << '\n';
}

void write_snapshots(const RunResult& result, const std::filesystem::path& file) {
  write_file(file, [&](std::ostream& os) { write_snapshots(result, os); });
}

void write_run_meta(const RunResult& result, const std::filesystem::path& file) {
  json meta = {{"scenario", scenario_to_json(result.scenario)},
               {"rng_stream", result.rng_stream}};
  if (!result.frames.empty()) meta["final_frame"] = frame_to_json(result.frames.back());
  write_file(file, [&](std::ostream& os) { os << meta.dump(2) << '\n'; });
}

}  // namespace wealthsim
