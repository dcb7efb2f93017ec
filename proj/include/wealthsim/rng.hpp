#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace wealthsim {

// Random stream used by the whole simulation. The raw engine is
// std::mt19937_64, whose output sequence is fixed by the C++ standard; the
// mappings below are pinned here (instead of std:: distributions, whose
// mapping is implementation-defined) so that a seed replays the identical
// stream on any platform. Identified as stream_id in run metadata.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0,1), 53-bit resolution.
  double unit_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on [0,n), exactly unbiased (multiply-with-rejection).
  std::uint64_t bounded(std::uint64_t n) {
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>(next_u64()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t t = -n % n;
      while (lo < t) {
        m = static_cast<u128>(next_u64()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool coin() { return (next_u64() >> 63) != 0; }

  static constexpr std::string_view stream_id = "mt19937_64/ws1";

 private:
  std::mt19937_64 gen_;
};

}  // namespace wealthsim
