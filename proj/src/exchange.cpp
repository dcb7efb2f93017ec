#include "wealthsim/exchange.hpp"

#include <algorithm>
#include <cassert>

namespace wealthsim {
namespace {

ExchangeOutcome transfer(Population& pop, AgentPair pair, Receiver receiver, double delta) {
  const std::size_t to = receiver == Receiver::First ? pair.i : pair.j;
  const std::size_t from = receiver == Receiver::First ? pair.j : pair.i;
  pop[from] -= delta;
  pop[to] += delta;
  assert(pop[from] >= 0.0);
  return {delta, true};
}

}  // namespace

ExchangeOutcome baseline_step(Population& pop, AgentPair pair, ExchangeDraw draw) {
  const double delta = draw.p * std::min(pop[pair.i], pop[pair.j]);
  return transfer(pop, pair, draw.receiver, delta);
}

ExchangeOutcome kinetic_step(Population& pop, AgentPair pair, ExchangeDraw draw) {
  const double delta = draw.p * (pop[pair.i] + pop[pair.j]) / 2.0;
  const std::size_t payer = draw.receiver == Receiver::First ? pair.j : pair.i;
  if (pop[payer] < delta) return {delta, false};  // no-debt rule
  return transfer(pop, pair, draw.receiver, delta);
}

ExchangeOutcome apply_exchange(Population& pop, ExchangeModel model, AgentPair pair,
                               ExchangeDraw draw) {
  return model == ExchangeModel::BaselineAsymmetric ? baseline_step(pop, pair, draw)
                                                    : kinetic_step(pop, pair, draw);
}

}  // namespace wealthsim
