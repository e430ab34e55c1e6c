#pragma once

#include <cstdint>
#include <vector>

#include "phasekit/model.hpp"

// Seeded simulation of the xor random channel.  All estimators are means of
// bounded per-trial statistics with a 3-sigma normal CI; trials draw from
// independent streams derived from (seed, trial, substream), so results are
// bit-identical regardless of evaluation order.

namespace phasekit {

struct Trajectory {
  std::vector<bool> inputs;            // length B
  std::vector<std::int64_t> selections;  // length B, values in [1, L]
  std::vector<bool> states;            // length L
  std::vector<bool> outputs;           // outputs[t] = inputs[t] ^ states[selections[t]-1]
};

struct Estimate {
  double mean = 0.0;
  double ci_half_width = 0.0;  // 3 sigma of the mean
  std::int64_t trials = 0;
};

// One full block draw for (cfg.seed, trial_index).  Training inputs are
// fixed to zero: the receiver learns g from y = x ^ g either way, so any
// known training input is equivalent for this channel.
Trajectory simulate_trajectory(const SimConfig& cfg, std::int64_t trial_index);

// Fraction of trials whose slot-(t+1) selection was not drawn in slots
// 1..t; exact reference is (1 - 1/L)^t.  Requires 0 <= t < B.
Estimate estimate_unseen_probability(const SimConfig& cfg, std::int64_t t);

// Mean count of distinct channels among the first t selections; exact
// reference is L(1 - (1 - 1/L)^t).  Requires 1 <= t <= B.
Estimate estimate_distinct_channels(const SimConfig& cfg, std::int64_t t);

// Empirical one-shot mutual information of the first data slot: a trial
// scores 1 bit when its data-slot channel was identified during training
// (the channel is then a noiseless bit pipe), else 0.  Exact reference is
// 1 - (1 - 1/L)^T.
Estimate estimate_data_phase_mi(const SimConfig& cfg);

// Sample mean of log2(1 + g^2).  An explicit gain list is averaged exactly;
// a normal distribution is sampled `samples` times with per-sample streams.
Estimate estimate_gain_expectation(const ValidatedModel& model, std::int64_t samples,
                                   std::uint64_t seed);

}  // namespace phasekit
