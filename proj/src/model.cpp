#include "phasekit/model.hpp"

#include <cmath>

namespace phasekit {

namespace {

struct Validator {
  void operator()(const XorRandomChannel& m) const {
    if (!(std::isfinite(m.a) && m.a > 0.0)) throw ValidationError("a must be positive");
  }
  void operator()(const ScalarGainChannel& m) const {
    if (m.gains.empty() && !m.distribution) {
      throw ValidationError("gain channel needs samples or a distribution");
    }
    for (double g : m.gains) {
      if (!std::isfinite(g)) throw ValidationError("gain samples must be finite");
    }
    if (m.distribution && !(std::isfinite(m.distribution->stddev) && m.distribution->stddev > 0.0)) {
      throw ValidationError("gain stddev must be positive");
    }
  }
  void operator()(const StationaryIid& m) const {
    if (!(std::isfinite(m.entropy_rate) && m.entropy_rate >= 0.0)) {
      throw ValidationError("entropy rate must be >= 0");
    }
  }
  void operator()(const Repetition&) const {}
  void operator()(const Oscillation&) const {}
  void operator()(const UnboundedSpike&) const {}
};

struct Namer {
  std::string operator()(const XorRandomChannel&) const { return "xor"; }
  std::string operator()(const ScalarGainChannel&) const { return "scalar_gain"; }
  std::string operator()(const StationaryIid&) const { return "stationary"; }
  std::string operator()(const Repetition&) const { return "repetition"; }
  std::string operator()(const Oscillation&) const { return "oscillation"; }
  std::string operator()(const UnboundedSpike&) const { return "spike"; }
};

}  // namespace

ValidatedModel validate_model(const ModelSpec& spec) {
  std::visit(Validator{}, spec);
  return ValidatedModel(spec);
}

bool ValidatedModel::conditioning_vacuous() const noexcept {
  return !std::holds_alternative<XorRandomChannel>(spec_) &&
         !std::holds_alternative<ScalarGainChannel>(spec_);
}

std::string ValidatedModel::name() const { return std::visit(Namer{}, spec_); }

std::int64_t blocklength(std::int64_t training_len, TrainingFraction tau) {
  if (training_len < 0) throw ValidationError("T must be >= 0");
  if (training_len == 0) return 0;
  return index_ceil(static_cast<double>(training_len) / tau.value());
}

std::int64_t channel_count(double a, std::int64_t block_len) {
  if (!(std::isfinite(a) && a > 0.0)) throw ValidationError("a must be positive");
  if (block_len < 0) throw ValidationError("B must be >= 0");
  if (block_len == 0) return 0;
  const std::int64_t L = index_ceil(a * static_cast<double>(block_len));
  return L < 1 ? 1 : L;
}

void validate_sim_config(const SimConfig& cfg) {
  if (cfg.training_len < 0) throw ValidationError("T must be >= 0");
  TrainingFraction tau(cfg.tau);  // validates tau
  if (!(std::isfinite(cfg.a) && cfg.a > 0.0)) throw ValidationError("a must be positive");
  if (cfg.trials < 1) throw ValidationError("trials must be >= 1");
}

}  // namespace phasekit
