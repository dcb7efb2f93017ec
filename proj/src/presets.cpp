#include "wealthsim/scenario_io.hpp"

namespace wealthsim {
namespace {

// Every preset runs 1000 agents from an equal $1000 start for 100k
// iterations, sampling metrics every 100 iterations with histogram snapshots
// at 1k/10k/100k. They differ only in exchange model and fiscal policy.
constexpr Preset kPresets[] = {
    {"baseline", "asymmetric exchange, no tax",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"none"},"redistribution":"all","horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"kinetic", "symmetric exchange, no tax",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"kinetic","tax":{"kind":"none"},"redistribution":"all","horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"flat_income_5", "5% flat income tax, redistributed to all",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"flat_income","rate":0.05},"redistribution":"all","income_period":10,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"flat_income_30", "30% flat income tax, redistributed to all",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"flat_income","rate":0.30},"redistribution":"all","income_period":10,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"flat_income_30_losers", "30% flat income tax, redistributed to period losers",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"flat_income","rate":0.30},"redistribution":"losers","income_period":10,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"flat_income_60", "60% flat income tax, redistributed to all",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"flat_income","rate":0.60},"redistribution":"all","income_period":10,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"progressive_45", "progressive income tax ramping 15% to 45% over $150..$850",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"progressive_income","schedule":{"r_min":0.15,"r_max":0.45,"y_free":150.0,"y_max":850.0}},"redistribution":"all","income_period":10,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"progressive_60", "progressive income tax ramping 15% to 60% over $150..$1200",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"progressive_income","schedule":{"r_min":0.15,"r_max":0.60,"y_free":150.0,"y_max":1200.0}},"redistribution":"all","income_period":10,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"progressive_75", "progressive income tax ramping 15% to 75% over $150..$1550",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"progressive_income","schedule":{"r_min":0.15,"r_max":0.75,"y_free":150.0,"y_max":1550.0}},"redistribution":"all","income_period":10,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"wealth_1", "1% flat wealth tax every 100 iterations",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"flat_wealth","rate":0.01},"redistribution":"all","wealth_period":100,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"wealth_5", "5% flat wealth tax every 100 iterations",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"flat_wealth","rate":0.05},"redistribution":"all","wealth_period":100,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"wealth_30", "30% flat wealth tax every 100 iterations",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"flat_wealth","rate":0.30},"redistribution":"all","wealth_period":100,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
    {"wealth_60", "60% flat wealth tax every 100 iterations",
     R"({"agents":1000,"initial_wealth":1000.0,"model":"baseline","tax":{"kind":"flat_wealth","rate":0.60},"redistribution":"all","wealth_period":100,"horizon":100000,"metrics_every":100,"snapshots":[1000,10000,100000],"seed":42})"},
};

}  // namespace

std::span<const Preset> presets() { return kPresets; }

const Preset* find_preset(std::string_view name) {
  for (const Preset& p : kPresets)
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace wealthsim
