#include "wealthsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wealthsim {
namespace {

void check_entries(std::span<const double> wealth, std::size_t min_size) {
  if (wealth.size() < min_size) throw std::invalid_argument("too few wealth entries");
  for (double w : wealth)
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("wealth entries must be finite and >= 0");
}

std::vector<double> sorted_ascending(std::span<const double> wealth) {
  std::vector<double> s(wealth.begin(), wealth.end());
  std::sort(s.begin(), s.end());
  return s;
}

double gini_sorted(const std::vector<double>& s) {
  const auto n = static_cast<double>(s.size());
  double total = 0.0;
  double ranked = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    total += s[k];
    ranked += static_cast<double>(k + 1) * s[k];
  }
  if (total <= 0.0) return 0.0;
  return 2.0 * ranked / (n * total) - (n + 1.0) / n;
}

QuantileShares shares_sorted(const std::vector<double>& s) {
  const std::size_t n = s.size();
  const std::size_t n_bottom = n / 2;
  const std::size_t n_top10 = (n + 9) / 10;
  const std::size_t n_top1 = (n + 99) / 100;

  const double total = std::accumulate(s.begin(), s.end(), 0.0);
  if (total <= 0.0) {
    const auto dn = static_cast<double>(n);
    return {static_cast<double>(n_bottom) / dn, static_cast<double>(n_top10) / dn,
            static_cast<double>(n_top1) / dn};
  }

  double bottom = 0.0;
  for (std::size_t k = 0; k < n_bottom; ++k) bottom += s[k];
  double top10 = 0.0;
  for (std::size_t k = n - n_top10; k < n; ++k) top10 += s[k];
  double top1 = 0.0;
  for (std::size_t k = n - n_top1; k < n; ++k) top1 += s[k];

  return {bottom / total, top10 / total, top1 / total};
}

}  // namespace

double gini(std::span<const double> wealth) {
  check_entries(wealth, 2);
  return gini_sorted(sorted_ascending(wealth));
}

QuantileShares quantile_shares(std::span<const double> wealth) {
  check_entries(wealth, 2);
  return shares_sorted(sorted_ascending(wealth));
}

HistogramSnapshot decile_histogram(std::span<const double> wealth, std::uint64_t iteration) {
  check_entries(wealth, 1);

  HistogramSnapshot snap;
  snap.iteration = iteration;

  const double max = *std::max_element(wealth.begin(), wealth.end());
  if (max <= 0.0) {
    snap.bin_edges.fill(0.0);
    snap.counts[0] = wealth.size();
    return snap;
  }

  // Interior edges at k * (max/10); the top edge is pinned to max itself so
  // the maximum value always falls inside the closed last bin.
  const double width = max / 10.0;
  for (std::size_t k = 0; k < 10; ++k) snap.bin_edges[k] = static_cast<double>(k) * width;
  snap.bin_edges[10] = max;

  for (double w : wealth) {
    const auto* first = snap.bin_edges.data() + 1;
    const auto* last = snap.bin_edges.data() + 11;
    auto idx = static_cast<std::size_t>(std::upper_bound(first, last, w) - first);
    if (idx > 9) idx = 9;  // w == max (or fp spill past the top edge)
    ++snap.counts[idx];
  }
  return snap;
}

MetricsFrame make_frame(std::uint64_t iteration, std::span<const double> wealth) {
  check_entries(wealth, 2);
  const std::vector<double> s = sorted_ascending(wealth);
  const QuantileShares q = shares_sorted(s);
  MetricsFrame f;
  f.iteration = iteration;
  f.gini = gini_sorted(s);
  f.share_bottom50 = q.bottom50;
  f.share_top10 = q.top10;
  f.share_top1 = q.top1;
  f.total_wealth = std::accumulate(wealth.begin(), wealth.end(), 0.0);
  return f;
}

}  // namespace wealthsim
