#include <doctest.h>

#include <cmath>
#include <vector>

#include "wealthsim/exchange.hpp"
#include "wealthsim/rng.hpp"

using namespace wealthsim;

TEST_CASE("draw_exchange stakes are uniform on [0,1) and receivers are balanced") {
  Rng rng(3);
  constexpr int draws = 1000000;
  double sum = 0.0;
  int first = 0;
  for (int k = 0; k < draws; ++k) {
    const ExchangeDraw d = draw_exchange(rng);
    CHECK(d.p >= 0.0);
    CHECK(d.p < 1.0);
    sum += d.p;
    if (d.receiver == Receiver::First) ++first;
  }
  const double mean = sum / draws;
  CHECK(std::abs(mean - 0.5) <= 3.0 * std::sqrt(1.0 / 12.0 / draws));
  const double first_freq = static_cast<double>(first) / draws;
  CHECK(std::abs(first_freq - 0.5) <= 3.0 * 0.5 / std::sqrt(static_cast<double>(draws)));
}

TEST_CASE("baseline step moves a fraction of the poorer side's wealth") {
  Population pop = Population::from_values({100.0, 200.0});
  const ExchangeOutcome out = baseline_step(pop, {0, 1}, {0.5, Receiver::Second});
  CHECK(out.applied);
  CHECK(out.delta_m == 50.0);
  CHECK(pop[0] == 50.0);
  CHECK(pop[1] == 250.0);
}

TEST_CASE("baseline step with the poorer side receiving") {
  Population pop = Population::from_values({100.0, 200.0});
  const ExchangeOutcome out = baseline_step(pop, {0, 1}, {0.5, Receiver::First});
  CHECK(out.delta_m == 50.0);
  CHECK(pop[0] == 150.0);
  CHECK(pop[1] == 150.0);
}

TEST_CASE("baseline step against a broke agent moves nothing") {
  Population pop = Population::from_values({0.0, 500.0});
  const ExchangeOutcome out = baseline_step(pop, {0, 1}, {0.9, Receiver::Second});
  CHECK(out.applied);
  CHECK(out.delta_m == 0.0);
  CHECK(pop[0] == 0.0);
  CHECK(pop[1] == 500.0);
}

TEST_CASE("kinetic step moves a fraction of the pair average") {
  Population pop = Population::from_values({100.0, 200.0});
  const ExchangeOutcome out = kinetic_step(pop, {0, 1}, {0.5, Receiver::Second});
  CHECK(out.applied);
  CHECK(out.delta_m == 75.0);
  CHECK(pop[0] == 25.0);
  CHECK(pop[1] == 275.0);
}

TEST_CASE("kinetic step is rejected when the payer cannot cover it") {
  Population pop = Population::from_values({10.0, 200.0});
  const ExchangeOutcome out = kinetic_step(pop, {0, 1}, {0.5, Receiver::Second});
  CHECK_FALSE(out.applied);
  CHECK(out.delta_m == 52.5);
  CHECK(pop[0] == 10.0);
  CHECK(pop[1] == 200.0);
}

TEST_CASE("kinetic step between two broke agents applies trivially") {
  Population pop = Population::from_values({0.0, 0.0});
  const ExchangeOutcome out = kinetic_step(pop, {0, 1}, {0.7, Receiver::First});
  CHECK(out.applied);
  CHECK(out.delta_m == 0.0);
}

TEST_CASE("kinetic outcome only depends on the physical receiver, not pair order") {
  const std::vector<double> start = {37.25, 110.5, 9.0};
  Population a = Population::from_values(start);
  Population b = Population::from_values(start);
  kinetic_step(a, {0, 2}, {0.375, Receiver::Second});
  kinetic_step(b, {2, 0}, {0.375, Receiver::First});
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("exchanges conserve the pair total and never create debt") {
  Rng rng(99);
  for (int k = 0; k < 20000; ++k) {
    std::vector<double> w = {rng.unit_double() * 1000.0, rng.unit_double() * 1000.0,
                             rng.unit_double() * 10.0};
    Population pop = Population::from_values(w);
    const AgentPair pair = sample_pair(rng, pop.size());
    const ExchangeDraw draw = draw_exchange(rng);
    const double before = pop[pair.i] + pop[pair.j];
    const ExchangeOutcome out = k % 2 == 0 ? baseline_step(pop, pair, draw)
                                           : kinetic_step(pop, pair, draw);
    const double after = pop[pair.i] + pop[pair.j];
    CHECK(std::abs(after - before) <= 1e-12 * (before + 1.0));
    CHECK(pop.all_nonnegative());
    CHECK(out.delta_m >= 0.0);
    if (!out.applied) {
      CHECK(pop[pair.i] == w[pair.i]);
      CHECK(pop[pair.j] == w[pair.j]);
    }
  }
}

TEST_CASE("baseline step widens or narrows the gap by exactly twice the transfer") {
  Rng rng(5);
  for (int k = 0; k < 5000; ++k) {
    std::vector<double> w = {rng.unit_double() * 500.0, rng.unit_double() * 500.0};
    Population pop = Population::from_values(w);
    const ExchangeDraw draw = draw_exchange(rng);
    const double gap_before = pop[0] - pop[1];
    const ExchangeOutcome out = baseline_step(pop, {0, 1}, draw);
    const double gap_after = pop[0] - pop[1];
    const double shift = draw.receiver == Receiver::First ? 2.0 * out.delta_m
                                                          : -2.0 * out.delta_m;
    CHECK(std::abs(gap_after - gap_before - shift) <= 1e-9);
  }
}
