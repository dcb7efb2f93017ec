#pragma once

#include <cstdint>
#include <vector>

#include "wealthsim/population.hpp"

namespace wealthsim {

enum class TaxKind { None, FlatIncome, ProgressiveIncome, FlatWealth };

enum class RedistributionPolicy { ToAll, ToLosers, ToBottomHalf };

// Linear rate ramp: 0 at or below y_free, r_min just above it, rising to
// r_max at y_max, clamped beyond.
struct ProgressiveSchedule {
  double r_min = 0.0;
  double r_max = 0.0;
  double y_free = 0.0;
  double y_max = 0.0;
  bool operator==(const ProgressiveSchedule&) const = default;
};

struct TaxRegime {
  TaxKind kind = TaxKind::None;
  double rate = 0.0;             // FlatIncome / FlatWealth
  ProgressiveSchedule schedule;  // ProgressiveIncome
  std::uint64_t income_period = 10;
  std::uint64_t wealth_period = 100;
  bool operator==(const TaxRegime&) const = default;
};

// Wealth vector copied at a period boundary; agent i's income over the period
// is pop[i] - baseline[i].
using PeriodBaseline = std::vector<double>;

struct TaxLedger {
  std::vector<double> collected;  // per-agent amount deducted, >= 0
  double total = 0.0;             // sum of collected
};

PeriodBaseline record_period_start(const Population& pop);

// rate * income from every agent whose period income is positive.
TaxLedger assess_flat_income_tax(Population& pop, const PeriodBaseline& base, double rate);

double progressive_rate(double income, const ProgressiveSchedule& s);

// progressive_rate(y) * (y - y_free) from every agent with income above the
// tax-free threshold.
TaxLedger assess_progressive_income_tax(Population& pop, const PeriodBaseline& base,
                                        const ProgressiveSchedule& s);

// rate * wealth from every agent.
TaxLedger assess_wealth_tax(Population& pop, double rate);

// Hands the collected pool back out. ToAll splits it over everyone. ToLosers
// splits it over agents with negative period income (falling back to ToAll
// when nobody lost). ToBottomHalf pays the floor(N/2) poorest by current
// wealth, ties broken by agent index. `base` is only consulted for ToLosers.
void redistribute(Population& pop, const TaxLedger& ledger, RedistributionPolicy policy,
                  const PeriodBaseline& base);

}  // namespace wealthsim
