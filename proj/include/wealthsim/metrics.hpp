#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace wealthsim {

struct MetricsFrame {
  std::uint64_t iteration = 0;
  double gini = 0.0;
  double share_bottom50 = 0.0;
  double share_top10 = 0.0;
  double share_top1 = 0.0;
  double total_wealth = 0.0;
  bool operator==(const MetricsFrame&) const = default;
};

struct QuantileShares {
  double bottom50 = 0.0;
  double top10 = 0.0;
  double top1 = 0.0;
  bool operator==(const QuantileShares&) const = default;
};

struct HistogramSnapshot {
  std::uint64_t iteration = 0;
  std::array<double, 11> bin_edges{};    // monotone; strictly increasing unless max == 0
  std::array<std::uint64_t, 10> counts{};  // sums to N
};

// Gini coefficient via the sorted-rank identity
//   g = 2 * sum_k k * m_(k) / (N * sum m) - (N + 1) / N
// with ascending order and 1-based ranks. Returns 0 for an all-zero vector.
// Throws std::invalid_argument for N < 2 or negative/non-finite entries.
double gini(std::span<const double> wealth);

// Wealth shares held by the poorest floor(N/2), the richest ceil(N/10) and
// the richest ceil(N/100) agents. Falls back to headcount fractions when
// total wealth is zero.
QuantileShares quantile_shares(std::span<const double> wealth);

// Ten equal-width bins spanning [0, max(wealth)], right-open except the last,
// which is closed. All agents land in bin 0 when max is 0.
HistogramSnapshot decile_histogram(std::span<const double> wealth, std::uint64_t iteration);

// gini + quantile_shares + total computed from one sorted pass. total_wealth
// is the plain (unsorted) entry sum.
MetricsFrame make_frame(std::uint64_t iteration, std::span<const double> wealth);

}  // namespace wealthsim
