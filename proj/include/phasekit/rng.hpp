#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

// Seeded streams for the simulators.  Every independent stream is a
// splitmix64 sequence whose initial state is derived from the master seed
// and a path of indices (trial, substream kind, row, ...) by folding each
// component through the splitmix64 finalizer:
//
//   state = seed;  for c in path:  state = mix64(state + PHI * (c + 1))
//
// with PHI = 0x9E3779B97F4A7C15 (2^64 / golden ratio).  This keeps trial
// streams independent of each other and of how work is scheduled, so
// estimates are reproducible bit for bit for a given (seed, trials).

namespace phasekit {

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer (Stafford/Steele avalanche mix).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = seed;
  for (std::uint64_t c : path) state = mix64(state + kGolden64 * (c + 1));
  return state;
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += kGolden64;
    return mix64(state_);
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1]
  double next_unit_open0() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  // uniform in [0, bound); multiply-shift map, bias below 2^-60 for the
  // bounds used here
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  bool next_bit() { return (next() >> 63) != 0; }

  // standard normal via Box-Muller
  double next_gaussian() {
    const double u1 = next_unit_open0();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace phasekit
