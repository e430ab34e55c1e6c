#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "phasekit/types.hpp"

namespace phasekit {

// One-shot channel: y_t = x_t xor g_{k_t}, with L = ceil(a*B) independent
// channel states g and uniform selections k_t.
struct XorRandomChannel {
  double a = 1.0;  // channels per transmission, L = ceil(a*B)
};

struct NormalGain {
  double mean = 0.0;
  double stddev = 1.0;
};

// Scalar bilinear channel y = g*x + v. Gains come either from an explicit
// sample list or from a named distribution.
struct ScalarGainChannel {
  std::vector<double> gains;
  std::optional<NormalGain> distribution;
};

// Stationary process with entropy rate h bits/symbol; conditioning on
// inputs is vacuous.
struct StationaryIid {
  double entropy_rate = 1.0;
};

// First block of fair bits repeated forever.
struct Repetition {};

// Pairs of repeated fair bits (b1, b1, b2, b2, ...).
struct Oscillation {};

// Independent fair bits except one symbol of entropy T placed near the
// middle of the training phase.
struct UnboundedSpike {};

using ModelSpec = std::variant<XorRandomChannel, ScalarGainChannel, StationaryIid,
                               Repetition, Oscillation, UnboundedSpike>;

class ValidatedModel;

// Checks model invariants; throws ValidationError naming the first violated
// one ("a must be positive", ...).
ValidatedModel validate_model(const ModelSpec& spec);

class ValidatedModel {
 public:
  const ModelSpec& spec() const noexcept { return spec_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(spec_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(spec_);
  }

  // True for the input-free processes, where conditioning on inputs changes
  // nothing and the mutual information is zero.
  bool conditioning_vacuous() const noexcept;

  std::string name() const;

 private:
  friend ValidatedModel validate_model(const ModelSpec&);
  explicit ValidatedModel(ModelSpec spec) : spec_(std::move(spec)) {}
  ModelSpec spec_;
};

// Block length B = ceil(T / tau).
std::int64_t blocklength(std::int64_t training_len, TrainingFraction tau);

// Channel count L = ceil(a * B), at least 1 for a positive a and B.
std::int64_t channel_count(double a, std::int64_t block_len);

// Inputs of one Monte Carlo experiment on the xor random channel.
struct SimConfig {
  std::int64_t training_len = 0;  // T, >= 0 (0 only for degenerate estimators)
  double tau = 0.5;
  double a = 1.0;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;

  std::int64_t block_len() const { return blocklength(training_len, TrainingFraction(tau)); }
  std::int64_t channels() const { return channel_count(a, block_len()); }
};

// Throws ValidationError on the first violated invariant.
void validate_sim_config(const SimConfig& cfg);

}  // namespace phasekit
