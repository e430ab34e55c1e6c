#include "phasekit/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "phasekit/errors.hpp"

namespace phasekit {
namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53
constexpr double kBruteforceBudget = 1e6;

// L^e as a double, with an early bail once the value leaves the exact
// integer range.  Callers compare against kExactIntegerLimit.
double pow_int(double base, std::int64_t e) {
  double out = 1.0;
  for (std::int64_t i = 0; i < e; ++i) {
    out *= base;
    if (out > kExactIntegerLimit) return out;
  }
  return out;
}

}  // namespace

XorExactConfig::XorExactConfig(std::int64_t training_len, std::int64_t block_len,
                               std::int64_t channels)
    : T(training_len), B(block_len), L(channels) {
  if (T < 0) throw ValidationError("training length must be >= 0");
  if (L < 1) throw ValidationError("channel count must be >= 1");
  std::int64_t min_block = T > 1 ? T : 1;
  if (B < min_block) throw ValidationError("block length must cover the training prefix");
}

XorExactConfig XorExactConfig::from_rates(std::int64_t training_len, double tau, double a) {
  TrainingFraction frac(tau);
  if (!(a > 0.0)) throw ValidationError("a must be positive");
  std::int64_t block = blocklength(training_len, frac);
  if (block < 1) block = 1;
  std::int64_t channels = channel_count(a, block);
  return XorExactConfig(training_len, block, channels);
}

double xor_block_entropy(const XorExactConfig& cfg) {
  if (cfg.T == 0) return 0.0;
  if (cfg.L == 1) return 1.0;
  double L = static_cast<double>(cfg.L);
  // Exact path: E|A_T| = (L^(T+1) - L (L-1)^T) / L^T, all three powers
  // integers.  Safe when the numerator's terms stay below 2^53.
  if (pow_int(L, cfg.T + 1) <= kExactIntegerLimit) {
    double num = pow_int(L, cfg.T + 1) - L * pow_int(L - 1.0, cfg.T);
    return num / pow_int(L, cfg.T);
  }
  // log1p/expm1 route: L * (1 - (1 - 1/L)^T) without cancellation.
  return L * (-std::expm1(static_cast<double>(cfg.T) * std::log1p(-1.0 / L)));
}

double xor_block_entropy_bruteforce(const XorExactConfig& cfg) {
  if (cfg.T == 0) return 0.0;
  if (pow_int(static_cast<double>(cfg.L), cfg.T) > kBruteforceBudget) {
    throw BudgetError("enumeration too large");
  }
  // DFS over all L^T selection sequences, carrying the seen-set so each node
  // costs O(1).  Sums the distinct count at the leaves.
  std::vector<std::int64_t> seen(static_cast<std::size_t>(cfg.L), 0);
  std::vector<std::int64_t> choice(static_cast<std::size_t>(cfg.T), 0);
  std::int64_t distinct = 0;
  std::int64_t leaves = 0;
  double total = 0.0;
  std::int64_t depth = 0;
  while (true) {
    if (depth == cfg.T) {
      total += static_cast<double>(distinct);
      ++leaves;
      // backtrack to the deepest level with an untried channel
      while (depth > 0) {
        --depth;
        std::int64_t c = choice[static_cast<std::size_t>(depth)];
        if (--seen[static_cast<std::size_t>(c)] == 0) --distinct;
        if (c + 1 < cfg.L) {
          choice[static_cast<std::size_t>(depth)] = c + 1;
          if (seen[static_cast<std::size_t>(c + 1)]++ == 0) ++distinct;
          ++depth;
          break;
        }
      }
      if (depth == 0) break;
      continue;
    }
    choice[static_cast<std::size_t>(depth)] = 0;
    if (seen[0]++ == 0) ++distinct;
    ++depth;
  }
  (void)leaves;
  return total / pow_int(static_cast<double>(cfg.L), cfg.T);
}

double xor_unseen_probability(std::int64_t t, std::int64_t channels) {
  if (t < 0) throw ValidationError("slot index must be >= 0");
  if (channels < 1) throw ValidationError("channel count must be >= 1");
  if (channels == 1) return t == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(t) * std::log1p(-1.0 / static_cast<double>(channels)));
}

double xor_conditional_entropy(std::int64_t t, const XorExactConfig& cfg, Regime regime) {
  if (t < 0 || t >= cfg.B) throw ValidationError("slot index outside the block");
  if (regime == Regime::diagonal) {
    // with the current input known, the output is uncertain exactly when the
    // selected channel is new
    return xor_unseen_probability(t, cfg.L);
  }
  if (t < cfg.T) throw ValidationError("data regime starts after the training prefix");
  return 1.0;
}

double xor_finite_mutual_information(const XorExactConfig& cfg) {
  if (cfg.T == 0) return 0.0;
  if (cfg.L == 1) return 1.0;
  return -std::expm1(static_cast<double>(cfg.T) *
                     std::log1p(-1.0 / static_cast<double>(cfg.L)));
}

double pedagogical_entropy(const ValidatedModel& model, std::int64_t t, std::int64_t T) {
  if (t < 0) throw ValidationError("slot index must be >= 0");
  if (T < 1) throw ValidationError("training length must be >= 1");
  if (model.is<StationaryIid>()) return model.as<StationaryIid>().entropy_rate;
  if (model.is<Repetition>()) return t < T ? 1.0 : 0.0;
  if (model.is<Oscillation>()) return t % 2 == 0 ? 1.0 : 0.0;
  if (model.is<UnboundedSpike>()) {
    if (T < 8) throw ValidationError("spike process needs training length >= 8");
    std::int64_t spike_at = T / 2 - 3;
    return t == spike_at ? static_cast<double>(T) : 1.0;
  }
  throw DomainError("per-symbol entropies defined for input-free processes only");
}

double limiting_h_prime(const ValidatedModel& model, double tau, double u, Regime regime) {
  TrainingFraction frac(tau);
  if (!(u >= -1.0) || !std::isfinite(u)) throw ValidationError("offset must be finite and >= -1");
  if (model.is<XorRandomChannel>()) {
    double a = model.as<XorRandomChannel>().a;
    double decayed = std::exp(-(tau / a) * (1.0 + u));
    if (regime == Regime::diagonal) return decayed;
    return u < 0.0 ? decayed : 1.0;
  }
  if (model.is<StationaryIid>()) return model.as<StationaryIid>().entropy_rate;
  if (model.is<Repetition>()) return u < 0.0 ? 1.0 : 0.0;
  if (model.is<Oscillation>()) return 0.5;
  if (model.is<UnboundedSpike>()) return 1.0;
  throw DomainError("no limiting entropy law for this model");
}

}  // namespace phasekit
