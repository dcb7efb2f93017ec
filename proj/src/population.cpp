#include "wealthsim/population.hpp"

#include <numeric>
#include <stdexcept>

namespace wealthsim {

Population::Population(std::vector<double> wealth, double total_at_init)
    : wealth_(std::move(wealth)), total_at_init_(total_at_init) {}

Population Population::equal(std::size_t n, double initial_wealth) {
  if (n < 2) throw std::invalid_argument("population needs at least 2 agents");
  if (initial_wealth < 0.0) throw std::domain_error("initial wealth must be >= 0");
  return Population(std::vector<double>(n, initial_wealth),
                    static_cast<double>(n) * initial_wealth);
}

Population Population::from_values(std::vector<double> wealth) {
  if (wealth.size() < 2) throw std::invalid_argument("population needs at least 2 agents");
  for (double w : wealth)
    if (w < 0.0) throw std::domain_error("wealth entries must be >= 0");
  const double total = std::accumulate(wealth.begin(), wealth.end(), 0.0);
  return Population(std::move(wealth), total);
}

double Population::total() const {
  return std::accumulate(wealth_.begin(), wealth_.end(), 0.0);
}

bool Population::all_nonnegative() const {
  for (double w : wealth_)
    if (w < 0.0) return false;
  return true;
}

}  // namespace wealthsim
