#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wealthsim {

struct AgentPair {
  std::size_t i;
  std::size_t j;  // always != i
};

// Per-agent wealth state. Entries never go negative; the total is conserved
// by every exchange and by every collect-plus-redistribute tax event.
class Population {
 public:
  // All n agents start with the same wealth.
  static Population equal(std::size_t n, double initial_wealth);

  // Arbitrary starting state, mostly for tests and hand-built cases.
  static Population from_values(std::vector<double> wealth);

  std::size_t size() const { return wealth_.size(); }
  double operator[](std::size_t i) const { return wealth_[i]; }
  double& operator[](std::size_t i) { return wealth_[i]; }
  std::span<const double> wealth() const { return wealth_; }
  std::vector<double> wealth_copy() const { return wealth_; }

  double total_at_init() const { return total_at_init_; }

  // Sum of the current entries.
  double total() const;

  bool all_nonnegative() const;

 private:
  Population(std::vector<double> wealth, double total_at_init);

  std::vector<double> wealth_;
  double total_at_init_;
};

// Two distinct indices, each marginally uniform over [0, n). Consumes two
// bounded draws: i over n values, then j over the remaining n-1.
template <class R>
AgentPair sample_pair(R& rng, std::size_t n) {
  const auto i = static_cast<std::size_t>(rng.bounded(n));
  auto j = static_cast<std::size_t>(rng.bounded(n - 1));
  if (j >= i) ++j;
  return {i, j};
}

}  // namespace wealthsim
