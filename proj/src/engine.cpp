#include "wealthsim/engine.hpp"

#include <algorithm>
#include <cmath>

#include "wealthsim/errors.hpp"

namespace wealthsim {
namespace {

void require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(ConfigErrorKind::OutOfRange, key, message);
}

}  // namespace

void validate_scenario(const Scenario& s) {
  require(s.n_agents >= 2, "agents", "agents must be >= 2");
  require(std::isfinite(s.initial_wealth) && s.initial_wealth >= 0.0, "initial_wealth",
          "initial_wealth must be finite and >= 0");

  const TaxRegime& tax = s.tax_regime;
  if (tax.kind == TaxKind::FlatIncome || tax.kind == TaxKind::FlatWealth)
    require(std::isfinite(tax.rate) && tax.rate >= 0.0 && tax.rate <= 1.0, "tax.rate",
            "tax.rate must lie in [0, 1]");
  if (tax.kind == TaxKind::ProgressiveIncome) {
    const ProgressiveSchedule& p = tax.schedule;
    require(std::isfinite(p.r_min) && p.r_min >= 0.0 && p.r_min <= 1.0, "tax.schedule.r_min",
            "tax.schedule.r_min must lie in [0, 1]");
    require(std::isfinite(p.r_max) && p.r_max >= p.r_min && p.r_max <= 1.0,
            "tax.schedule.r_max", "tax.schedule.r_max must lie in [r_min, 1]");
    require(std::isfinite(p.y_free) && p.y_free >= 0.0, "tax.schedule.y_free",
            "tax.schedule.y_free must be >= 0");
    require(std::isfinite(p.y_max) && p.y_max > p.y_free, "tax.schedule.y_max",
            "tax.schedule.y_max must be > y_free");
  }
  require(tax.income_period >= 1, "income_period", "income_period must be >= 1");
  require(tax.wealth_period >= 1, "wealth_period", "wealth_period must be >= 1");
  require(s.metrics_every >= 1, "metrics_every", "metrics_every must be >= 1");
  require(std::is_sorted(s.snapshot_at.begin(), s.snapshot_at.end()) &&
              std::adjacent_find(s.snapshot_at.begin(), s.snapshot_at.end()) ==
                  s.snapshot_at.end(),
          "snapshots", "snapshots must be sorted and unique");
  for (std::uint64_t t : s.snapshot_at)
    require(t <= s.horizon, "snapshots", "snapshot points must lie in [0, horizon]");
}

RunResult run(const Scenario& s, RunObserver* observer) {
  validate_scenario(s);

  Population pop = Population::equal(s.n_agents, s.initial_wealth);
  Rng rng(s.seed);

  const TaxRegime& tax = s.tax_regime;
  const bool income_tax =
      tax.kind == TaxKind::FlatIncome || tax.kind == TaxKind::ProgressiveIncome;
  const bool wealth_tax = tax.kind == TaxKind::FlatWealth;
  // Income taxes need the period baseline to measure income; a wealth tax
  // only needs one when redistribution targets the period's losers.
  const bool track_baseline =
      income_tax || (wealth_tax && s.redistribution == RedistributionPolicy::ToLosers);

  PeriodBaseline baseline;
  if (track_baseline) baseline = record_period_start(pop);

  RunResult out;
  out.scenario = s;
  out.rng_stream = std::string(Rng::stream_id);

  auto is_snapshot_point = [&](std::uint64_t t) {
    return std::binary_search(s.snapshot_at.begin(), s.snapshot_at.end(), t);
  };
  auto record_frame = [&](std::uint64_t t) {
    const MetricsFrame f = make_frame(t, pop.wealth());
    out.frames.push_back(f);
    if (observer) observer->on_frame(t, f, pop.wealth());
  };
  auto record_snapshot = [&](std::uint64_t t) {
    out.snapshots.push_back(decile_histogram(pop.wealth(), t));
  };

  record_frame(0);
  if (is_snapshot_point(0)) record_snapshot(0);

  for (std::uint64_t t = 1; t <= s.horizon; ++t) {
    const ExchangeOutcome outcome = step(pop, s.exchange_model, rng);
    if (observer) observer->on_exchange(t, outcome);

    const bool income_due = income_tax && t % tax.income_period == 0;
    const bool wealth_due = wealth_tax && t % tax.wealth_period == 0;
    if (income_due || wealth_due) {
      TaxLedger ledger;
      if (tax.kind == TaxKind::FlatIncome)
        ledger = assess_flat_income_tax(pop, baseline, tax.rate);
      else if (tax.kind == TaxKind::ProgressiveIncome)
        ledger = assess_progressive_income_tax(pop, baseline, tax.schedule);
      else
        ledger = assess_wealth_tax(pop, tax.rate);
      if (observer) observer->on_tax_assessed(t, ledger);

      redistribute(pop, ledger, s.redistribution, baseline);
      if (observer) observer->on_redistributed(t);

      // Receipts count toward the next period's income.
      if (track_baseline) baseline = record_period_start(pop);
    }

    const bool snap_here = is_snapshot_point(t);
    if (t % s.metrics_every == 0 || snap_here || t == s.horizon) record_frame(t);
    if (snap_here) record_snapshot(t);
  }

  out.final_wealth = pop.wealth_copy();
  return out;
}

}  // namespace wealthsim
