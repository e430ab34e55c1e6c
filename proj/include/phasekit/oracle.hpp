#pragma once

#include <cstdint>

#include "phasekit/model.hpp"
#include "phasekit/types.hpp"

// Exact finite-size references for the xor random channel and the
// pedagogical processes.  Everything here is closed form (or exhaustive
// enumeration) and independent of the asymptotic analysis code, so the two
// can check each other.

namespace phasekit {

struct XorExactConfig {
  std::int64_t T = 1;  // training length, >= 0 (0 only for degenerate limits)
  std::int64_t B = 1;  // block length, >= max(T, 1)
  std::int64_t L = 1;  // channel count, >= 1

  XorExactConfig(std::int64_t training_len, std::int64_t block_len, std::int64_t channels);

  // B = ceil(T / tau), L = ceil(a * B)
  static XorExactConfig from_rates(std::int64_t training_len, double tau, double a);
};

// Expected number of distinct channels seen in T training slots:
// E|A_T| = L * (1 - (1 - 1/L)^T), in bits it is also the block conditional
// entropy of the training outputs.  Uses exact integer arithmetic whenever
// L^(T+1) fits in a double's integer range, so small cases agree bit for bit
// with the exhaustive path below.
double xor_block_entropy(const XorExactConfig& cfg);

// Exhaustive average of the distinct-channel count over all L^T selection
// sequences; throws BudgetError ("enumeration too large") beyond 1e6.
double xor_block_entropy_bruteforce(const XorExactConfig& cfg);

// P(channel drawn at slot t+1 was not seen in slots 1..t) = (1 - 1/L)^t.
double xor_unseen_probability(std::int64_t t, std::int64_t channels);

// Per-symbol conditional entropy H(y_{t+1} | x^{t+1 or T}, y^t, k^{t+1}):
// (1 - 1/L)^t in the diagonal regime; exactly 1 bit in the data regime
// (t >= T), where the input of slot t+1 is unknown.
double xor_conditional_entropy(std::int64_t t, const XorExactConfig& cfg, Regime regime);

// One-shot mutual information of a data slot at finite size:
// 1 - (1 - 1/L)^T.
double xor_finite_mutual_information(const XorExactConfig& cfg);

// Exact per-symbol entropy H(y_{t+1} | y^t) of the input-free processes.
// The spike carries entropy T at t = floor(T/2) - 3 (requires T >= 8).
double pedagogical_entropy(const ValidatedModel& model, std::int64_t t, std::int64_t T);

// Limiting per-symbol entropy law H'(u) used by the integral consistency
// check.  For the oscillation process the raw limit does not exist and the
// time-averaged value 1/2 is returned; the spike's impulse at u = -1/2 is
// not representable as a function value and is deliberately omitted (the
// surface keeps the jump, so the residual exposes it).
double limiting_h_prime(const ValidatedModel& model, double tau, double u, Regime regime);

}  // namespace phasekit
