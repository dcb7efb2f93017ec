#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wealthsim/exchange.hpp"
#include "wealthsim/metrics.hpp"
#include "wealthsim/population.hpp"
#include "wealthsim/rng.hpp"
#include "wealthsim/taxation.hpp"

namespace wealthsim {

struct Scenario {
  std::size_t n_agents = 1000;
  double initial_wealth = 1000.0;
  ExchangeModel exchange_model = ExchangeModel::BaselineAsymmetric;
  TaxRegime tax_regime;
  RedistributionPolicy redistribution = RedistributionPolicy::ToAll;
  std::uint64_t horizon = 100000;
  std::uint64_t metrics_every = 100;
  std::vector<std::uint64_t> snapshot_at = {1000, 10000, 100000};  // sorted, unique
  std::uint64_t seed = 0;
  bool operator==(const Scenario&) const = default;
};

struct RunResult {
  Scenario scenario;
  std::string rng_stream;  // generator identity/version the run was produced with
  std::vector<MetricsFrame> frames;
  std::vector<HistogramSnapshot> snapshots;
  std::vector<double> final_wealth;
};

// Diagnostic hooks, called in the fixed event order of an iteration:
// exchange, tax assessment, redistribution, then metrics.
class RunObserver {
 public:
  virtual ~RunObserver() = default;
  virtual void on_exchange(std::uint64_t, const ExchangeOutcome&) {}
  virtual void on_tax_assessed(std::uint64_t, const TaxLedger&) {}
  virtual void on_redistributed(std::uint64_t) {}
  virtual void on_frame(std::uint64_t, const MetricsFrame&, std::span<const double>) {}
};

// Throws ConfigError when a field is out of range.
void validate_scenario(const Scenario& s);

// One pairwise encounter: pair draw plus one exchange. Stream order per
// iteration is fixed: pair index i, pair index j, stake p, receiver bit.
template <class R>
ExchangeOutcome step(Population& pop, ExchangeModel model, R& rng) {
  const AgentPair pair = sample_pair(rng, pop.size());
  const ExchangeDraw draw = draw_exchange(rng);
  return apply_exchange(pop, model, pair, draw);
}

// Full deterministic run: equal start, `horizon` iterations, frames every
// metrics_every iterations (plus iteration 0, every snapshot point and the
// final iteration), histogram snapshots at the configured points. Identical
// scenarios produce bit-identical results.
RunResult run(const Scenario& s, RunObserver* observer = nullptr);

}  // namespace wealthsim
