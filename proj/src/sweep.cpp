#include "wealthsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iterator>
#include <thread>

#include "wealthsim/engine.hpp"
#include "wealthsim/errors.hpp"
#include "wealthsim/scenario_io.hpp"

namespace wealthsim {

using nlohmann::json;

namespace {

std::uint64_t parse_seed_entry(const json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  throw ConfigError(ConfigErrorKind::BadType, "seeds", "'seeds' entries must be >= 0 integers");
}

std::vector<std::uint64_t> parse_seeds(const json& v) {
  std::vector<std::uint64_t> seeds;
  if (v.is_array()) {
    for (const auto& e : v) seeds.push_back(parse_seed_entry(e));
    if (seeds.empty())
      throw ConfigError(ConfigErrorKind::OutOfRange, "seeds", "'seeds' must not be empty");
    return seeds;
  }
  if (v.is_object()) {
    for (const auto& item : v.items())
      if (item.key() != "count" && item.key() != "base_seed")
        throw ConfigError(ConfigErrorKind::UnknownKey, "seeds." + item.key(),
                          "unknown key 'seeds." + item.key() + "'");
    if (!v.contains("count"))
      throw ConfigError(ConfigErrorKind::MissingKey, "seeds.count",
                        "missing required key 'seeds.count'");
    const std::uint64_t count = parse_seed_entry(v["count"]);
    if (count < 1)
      throw ConfigError(ConfigErrorKind::OutOfRange, "seeds.count", "'seeds.count' must be >= 1");
    const std::uint64_t base =
        v.contains("base_seed") ? parse_seed_entry(v["base_seed"]) : 1;
    for (std::uint64_t k = 0; k < count; ++k) seeds.push_back(base + k);
    return seeds;
  }
  throw ConfigError(ConfigErrorKind::BadType, "seeds",
                    "'seeds' must be an array or {count, base_seed}");
}

// Digs value into doc at a dotted path, creating intermediate objects.
void apply_key_path(json& doc, const std::string& key_path, const json& value) {
  json* cur = &doc;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t dot = key_path.find('.', pos);
    const std::string key = key_path.substr(pos, dot - pos);
    if (key.empty())
      throw ConfigError(ConfigErrorKind::OutOfRange, key_path, "empty segment in axis key path");
    if (dot == std::string::npos) {
      (*cur)[key] = value;
      return;
    }
    json& next = (*cur)[key];
    if (next.is_null()) next = json::object();
    if (!next.is_object())
      throw ConfigError(ConfigErrorKind::BadType, key_path,
                        "axis key path '" + key_path + "' crosses a non-object value");
    cur = &next;
    pos = dot + 1;
  }
}

std::string sanitize_token(std::string s) {
  for (char& c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == '=';
    if (!ok) c = '_';
  }
  return s;
}

std::string value_token(const json& v) {
  return sanitize_token(v.is_string() ? v.get<std::string>() : v.dump());
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct PlannedRun {
  std::string name;
  std::vector<std::pair<std::string, json>> assignments;  // axis key -> value
  std::uint64_t seed = 0;
};

std::vector<PlannedRun> enumerate_runs(const SweepSpec& spec) {
  std::vector<PlannedRun> planned;
  std::vector<std::size_t> idx(spec.axes.size(), 0);
  for (;;) {
    std::string combo;
    std::vector<std::pair<std::string, json>> assignments;
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
      const SweepAxis& axis = spec.axes[a];
      const json& value = axis.values[idx[a]];
      assignments.emplace_back(axis.key_path, value);
      if (!combo.empty()) combo += "__";
      combo += sanitize_token(axis.key_path) + "=" + value_token(value);
    }
    for (std::uint64_t seed : spec.seeds) {
      PlannedRun r;
      r.name = combo.empty() ? "seed=" + std::to_string(seed)
                             : combo + "__seed=" + std::to_string(seed);
      r.assignments = assignments;
      r.seed = seed;
      planned.push_back(std::move(r));
    }
    // odometer over axis value indices
    std::size_t a = spec.axes.size();
    while (a > 0) {
      --a;
      if (++idx[a] < spec.axes[a].values.size()) break;
      idx[a] = 0;
      if (a == 0) return planned;
    }
    if (spec.axes.empty()) return planned;
  }
}

void write_summary(const std::filesystem::path& file, const SweepSummary& summary) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw IoError("cannot open output file: " + file.string());
  os << "name,seed,status,error,iteration,gini,share_bottom50,share_top10,share_top1,"
        "total_wealth\n";
  for (const SweepRunRecord& r : summary.runs) {
    os << csv_escape(r.name) << ',' << r.seed << ',';
    if (r.ok) {
      const MetricsFrame& f = r.final_frame;
      os << "ok,," << f.iteration << ',' << csv_number(f.gini) << ','
         << csv_number(f.share_bottom50) << ',' << csv_number(f.share_top10) << ','
         << csv_number(f.share_top1) << ',' << csv_number(f.total_wealth) << '\n';
    } else {
      os << "error," << csv_escape(r.error) << ",,,,,,\n";
    }
  }
  os.flush();
  if (!os) throw IoError("failed writing output file: " + file.string());
}

}  // namespace

SweepSpec parse_sweep(const json& doc) {
  if (!doc.is_object())
    throw ConfigError(ConfigErrorKind::BadType, "", "sweep document must be a JSON object");
  for (const auto& item : doc.items())
    if (item.key() != "base" && item.key() != "axes" && item.key() != "seeds" &&
        item.key() != "max_runs")
      throw ConfigError(ConfigErrorKind::UnknownKey, item.key(),
                        "unknown key '" + item.key() + "'");

  SweepSpec spec;
  if (!doc.contains("base"))
    throw ConfigError(ConfigErrorKind::MissingKey, "base", "missing required key 'base'");
  spec.base = doc["base"];
  if (!spec.base.is_object())
    throw ConfigError(ConfigErrorKind::BadType, "base", "'base' must be an object");

  if (doc.contains("axes")) {
    const json& axes = doc["axes"];
    if (!axes.is_object())
      throw ConfigError(ConfigErrorKind::BadType, "axes", "'axes' must be an object");
    for (const auto& item : axes.items()) {
      if (!item.value().is_array() || item.value().empty())
        throw ConfigError(ConfigErrorKind::BadType, "axes." + item.key(),
                          "axis '" + item.key() + "' must be a non-empty array");
      SweepAxis axis;
      axis.key_path = item.key();
      for (const auto& v : item.value()) axis.values.push_back(v);
      spec.axes.push_back(std::move(axis));
    }
  }

  if (!doc.contains("seeds"))
    throw ConfigError(ConfigErrorKind::MissingKey, "seeds", "missing required key 'seeds'");
  spec.seeds = parse_seeds(doc["seeds"]);

  if (doc.contains("max_runs")) {
    spec.max_runs = static_cast<std::size_t>(parse_seed_entry(doc["max_runs"]));
    if (spec.max_runs < 1)
      throw ConfigError(ConfigErrorKind::OutOfRange, "max_runs", "'max_runs' must be >= 1");
  }

  std::size_t total = spec.seeds.size();
  for (const SweepAxis& axis : spec.axes) {
    if (total > spec.max_runs) break;  // already over; avoids unbounded growth
    total *= axis.values.size();
  }
  if (total > spec.max_runs)
    throw ConfigError(ConfigErrorKind::OutOfRange, "axes",
                      "sweep would exceed max_runs = " + std::to_string(spec.max_runs));

  return spec;
}

SweepSpec parse_sweep_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigErrorKind::Syntax, "",
                      "syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_sweep(doc);
}

SweepSpec load_sweep(const std::filesystem::path& file) {
  if (std::filesystem::exists(file) && !std::filesystem::is_regular_file(file))
    throw IoError("not a regular file: " + file.string());
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open sweep file: " + file.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading sweep file: " + file.string());
  return parse_sweep_text(text);
}

SweepSummary run_sweep(const SweepSpec& spec, unsigned parallelism,
                       const std::filesystem::path& out_dir) {
  const std::vector<PlannedRun> planned = enumerate_runs(spec);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + out_dir.string());

  SweepSummary summary;
  summary.runs.resize(planned.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= planned.size()) return;
      const PlannedRun& plan = planned[k];
      SweepRunRecord& record = summary.runs[k];
      record.name = plan.name;
      record.seed = plan.seed;
      try {
        json doc = spec.base;
        for (const auto& [key_path, value] : plan.assignments)
          apply_key_path(doc, key_path, value);
        doc["seed"] = plan.seed;
        const Scenario scenario = parse_scenario(doc);
        const RunResult result = run(scenario);

        const std::filesystem::path dir = out_dir / plan.name;
        std::filesystem::create_directories(dir);
        write_timeseries(result, dir / "timeseries.csv");
        write_snapshots(result, dir / "snapshots.json");
        write_run_meta(result, dir / "run.json");
        record.final_frame = result.frames.back();
        record.ok = true;
      } catch (const std::exception& e) {
        record.ok = false;
        record.error = e.what();
      }
    }
  };

  unsigned threads = parallelism == 0 ? 1u : parallelism;
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, planned.empty() ? 1 : planned.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const SweepRunRecord& r : summary.runs)
    if (!r.ok) ++summary.failures;

  write_summary(out_dir / "summary.csv", summary);
  return summary;
}

}  // namespace wealthsim
