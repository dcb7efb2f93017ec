#pragma once

#include "wealthsim/population.hpp"

namespace wealthsim {

enum class ExchangeModel { BaselineAsymmetric, KineticSymmetric };

// Which member of the pair gains the transferred amount.
enum class Receiver { First, Second };

struct ExchangeDraw {
  double p = 0.0;  // stake fraction in [0,1)
  Receiver receiver = Receiver::First;
};

struct ExchangeOutcome {
  double delta_m = 0.0;  // amount that was (or would have been) moved
  bool applied = true;   // false when a kinetic trade was rejected
};

// p uniform on [0,1); each side receives with probability 1/2.
// Consumes one unit_double, then one coin flip.
template <class R>
ExchangeDraw draw_exchange(R& rng) {
  const double p = rng.unit_double();
  return {p, rng.coin() ? Receiver::Second : Receiver::First};
}

// Moves p * min(m_i, m_j) to the receiver. Never creates debt.
ExchangeOutcome baseline_step(Population& pop, AgentPair pair, ExchangeDraw draw);

// Moves p * (m_i + m_j) / 2; the trade is rejected (no state change) when the
// payer cannot cover the amount.
ExchangeOutcome kinetic_step(Population& pop, AgentPair pair, ExchangeDraw draw);

ExchangeOutcome apply_exchange(Population& pop, ExchangeModel model, AgentPair pair,
                               ExchangeDraw draw);

}  // namespace wealthsim
