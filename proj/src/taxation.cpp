#include "wealthsim/taxation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wealthsim {

PeriodBaseline record_period_start(const Population& pop) { return pop.wealth_copy(); }

namespace {

// Deducts amount_for(i) from every agent where it is positive.
template <class AmountFn>
TaxLedger collect(Population& pop, AmountFn amount_for) {
  TaxLedger ledger;
  ledger.collected.assign(pop.size(), 0.0);
  for (std::size_t i = 0; i < pop.size(); ++i) {
    const double due = amount_for(i);
    if (due <= 0.0) continue;
    ledger.collected[i] = due;
    pop[i] -= due;
    ledger.total += due;
  }
  return ledger;
}

}  // namespace

TaxLedger assess_flat_income_tax(Population& pop, const PeriodBaseline& base, double rate) {
  assert(base.size() == pop.size());
  return collect(pop, [&](std::size_t i) {
    const double income = pop[i] - base[i];
    return income > 0.0 ? rate * income : 0.0;
  });
}

double progressive_rate(double income, const ProgressiveSchedule& s) {
  if (income <= s.y_free) return 0.0;
  const double t = (income - s.y_free) / (s.y_max - s.y_free);
  return std::clamp(s.r_min + (s.r_max - s.r_min) * t, s.r_min, s.r_max);
}

TaxLedger assess_progressive_income_tax(Population& pop, const PeriodBaseline& base,
                                        const ProgressiveSchedule& s) {
  assert(base.size() == pop.size());
  return collect(pop, [&](std::size_t i) {
    const double income = pop[i] - base[i];
    if (income <= s.y_free) return 0.0;
    return progressive_rate(income, s) * (income - s.y_free);
  });
}

TaxLedger assess_wealth_tax(Population& pop, double rate) {
  return collect(pop, [&](std::size_t i) { return rate * pop[i]; });
}

void redistribute(Population& pop, const TaxLedger& ledger, RedistributionPolicy policy,
                  const PeriodBaseline& base) {
  const std::size_t n = pop.size();
  if (ledger.total <= 0.0) return;

  std::vector<std::size_t> recipients;
  switch (policy) {
    case RedistributionPolicy::ToAll:
      break;
    case RedistributionPolicy::ToLosers:
      assert(base.size() == n);
      for (std::size_t i = 0; i < n; ++i)
        if (pop[i] - base[i] < 0.0) recipients.push_back(i);
      break;
    case RedistributionPolicy::ToBottomHalf: {
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return pop[a] < pop[b]; });
      recipients.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n / 2));
      break;
    }
  }

  if (policy == RedistributionPolicy::ToAll || recipients.empty()) {
    const double share = ledger.total / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) pop[i] += share;
    return;
  }
  const double share = ledger.total / static_cast<double>(recipients.size());
  for (std::size_t i : recipients) pop[i] += share;
}

}  // namespace wealthsim
