#include "phasekit/mc.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "phasekit/errors.hpp"
#include "phasekit/rng.hpp"

namespace phasekit {
namespace {

// substream kinds under one trial
constexpr std::uint64_t kStreamSelections = 0;
constexpr std::uint64_t kStreamStates = 1;
constexpr std::uint64_t kStreamInputs = 2;

SplitMix64 trial_stream(const SimConfig& cfg, std::int64_t trial, std::uint64_t kind) {
  return SplitMix64(derive_stream(cfg.seed, {static_cast<std::uint64_t>(trial), kind}));
}

// mean and 3-sigma CI from exact integer sums of a per-trial statistic
Estimate from_sums(std::int64_t n, double sum, double sum_sq) {
  Estimate est;
  est.trials = n;
  est.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double var = (sum_sq - sum * sum / static_cast<double>(n)) / static_cast<double>(n - 1);
    if (var < 0.0) var = 0.0;  // rounding guard for constant statistics
    est.ci_half_width = 3.0 * std::sqrt(var / static_cast<double>(n));
  }
  return est;
}

}  // namespace

Trajectory simulate_trajectory(const SimConfig& cfg, std::int64_t trial_index) {
  validate_sim_config(cfg);
  if (trial_index < 0) throw ValidationError("trial index must be >= 0");
  const std::int64_t B = cfg.block_len();
  const std::int64_t L = cfg.channels();

  Trajectory traj;
  traj.selections.resize(static_cast<std::size_t>(B));
  traj.states.resize(static_cast<std::size_t>(L));
  traj.inputs.resize(static_cast<std::size_t>(B));
  traj.outputs.resize(static_cast<std::size_t>(B));

  SplitMix64 sel = trial_stream(cfg, trial_index, kStreamSelections);
  for (std::int64_t t = 0; t < B; ++t) {
    traj.selections[static_cast<std::size_t>(t)] =
        static_cast<std::int64_t>(sel.next_below(static_cast<std::uint64_t>(L))) + 1;
  }
  SplitMix64 st = trial_stream(cfg, trial_index, kStreamStates);
  for (std::int64_t l = 0; l < L; ++l) traj.states[static_cast<std::size_t>(l)] = st.next_bit();
  SplitMix64 in = trial_stream(cfg, trial_index, kStreamInputs);
  for (std::int64_t t = 0; t < B; ++t) {
    const bool x = t < cfg.training_len ? false : in.next_bit();
    traj.inputs[static_cast<std::size_t>(t)] = x;
    const auto k = static_cast<std::size_t>(traj.selections[static_cast<std::size_t>(t)] - 1);
    traj.outputs[static_cast<std::size_t>(t)] = x ^ traj.states[k];
  }
  return traj;
}

Estimate estimate_unseen_probability(const SimConfig& cfg, std::int64_t t) {
  validate_sim_config(cfg);
  const std::int64_t B = cfg.block_len();
  const std::int64_t L = cfg.channels();
  if (t < 0 || t >= B) throw ValidationError("slot index outside the block");

  // stamp buffer instead of clearing a seen-array per trial
  std::vector<std::int64_t> last_seen(static_cast<std::size_t>(L), -1);
  std::int64_t hits = 0;
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 sel = trial_stream(cfg, trial, kStreamSelections);
    for (std::int64_t s = 0; s < t; ++s) {
      last_seen[sel.next_below(static_cast<std::uint64_t>(L))] = trial;
    }
    const std::uint64_t k = sel.next_below(static_cast<std::uint64_t>(L));
    if (last_seen[k] != trial) ++hits;
  }
  const double sum = static_cast<double>(hits);
  return from_sums(cfg.trials, sum, sum);  // indicator: sum of squares = sum
}

Estimate estimate_distinct_channels(const SimConfig& cfg, std::int64_t t) {
  validate_sim_config(cfg);
  const std::int64_t B = cfg.block_len();
  const std::int64_t L = cfg.channels();
  if (t < 1 || t > B) throw ValidationError("slot count outside the block");

  std::vector<std::int64_t> last_seen(static_cast<std::size_t>(L), -1);
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 sel = trial_stream(cfg, trial, kStreamSelections);
    std::int64_t distinct = 0;
    for (std::int64_t s = 0; s < t; ++s) {
      const std::uint64_t k = sel.next_below(static_cast<std::uint64_t>(L));
      if (last_seen[k] != trial) {
        last_seen[k] = trial;
        ++distinct;
      }
    }
    sum += distinct;
    sum_sq += distinct * distinct;
  }
  return from_sums(cfg.trials, static_cast<double>(sum), static_cast<double>(sum_sq));
}

Estimate estimate_data_phase_mi(const SimConfig& cfg) {
  validate_sim_config(cfg);
  if (cfg.training_len == 0) {
    // no training: the data slot's channel is never identified, I = 0
    Estimate est;
    est.trials = cfg.trials;
    return est;
  }
  const std::int64_t B = cfg.block_len();
  const std::int64_t L = cfg.channels();
  const std::int64_t T = cfg.training_len;
  if (T >= B) throw DomainError("no data slot in the block; tau too large");

  std::vector<std::int64_t> last_seen(static_cast<std::size_t>(L), -1);
  std::int64_t hits = 0;
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 sel = trial_stream(cfg, trial, kStreamSelections);
    for (std::int64_t s = 0; s < T; ++s) {
      last_seen[sel.next_below(static_cast<std::uint64_t>(L))] = trial;
    }
    const std::uint64_t k = sel.next_below(static_cast<std::uint64_t>(L));
    if (last_seen[k] == trial) ++hits;  // identified channel carries one bit
  }
  const double sum = static_cast<double>(hits);
  return from_sums(cfg.trials, sum, sum);
}

Estimate estimate_gain_expectation(const ValidatedModel& model, std::int64_t samples,
                                   std::uint64_t seed) {
  if (!model.is<ScalarGainChannel>()) {
    throw DomainError("gain expectation defined for the scalar gain channel");
  }
  const auto& chan = model.as<ScalarGainChannel>();
  double sum = 0.0, sum_sq = 0.0, c = 0.0, c_sq = 0.0;
  auto add = [&](double g) {
    const double v = std::log2(1.0 + g * g);
    // Kahan summation: these accumulators can cross 1e6 terms
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
    y = v * v - c_sq;
    t = sum_sq + y;
    c_sq = (t - sum_sq) - y;
    sum_sq = t;
  };
  std::int64_t n;
  if (!chan.gains.empty()) {
    n = static_cast<std::int64_t>(chan.gains.size());
    for (double g : chan.gains) add(g);
  } else {
    if (samples < 1) throw ValidationError("sample count must be >= 1");
    n = samples;
    for (std::int64_t i = 0; i < samples; ++i) {
      // one stream per sample keeps the estimate order-independent
      SplitMix64 rng(derive_stream(seed, {static_cast<std::uint64_t>(i)}));
      add(chan.distribution->mean + chan.distribution->stddev * rng.next_gaussian());
    }
  }
  return from_sums(n, sum, sum_sq);
}

}  // namespace phasekit
