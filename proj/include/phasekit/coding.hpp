#pragma once

#include <cstdint>
#include <optional>

#include "phasekit/gf2.hpp"
#include "phasekit/types.hpp"

// Coding experiment over the erasure channel induced by one-shot training:
// within each block, data slots whose channel was identified during
// training are perfect bit pipes, the rest carry nothing, and the receiver
// knows which are which.  Random dense linear codes plus GF(2) elimination
// measure the block error rate around the rate threshold (1 - tau) * I.

namespace phasekit {

struct CodingConfig {
  std::int64_t block_len = 0;  // B, slots per channel realization
  double tau = 0.5;            // training fraction; T = ceil(tau * B)
  double a = 1.0;              // channel density; L = ceil(a * B)
  std::int64_t n_blocks = 1;   // independent blocks per codeword
  double rate = 0.0;           // R, message bits per transmission
  std::int64_t trials = 1;
  std::uint64_t seed = 0;

  std::int64_t training_len() const { return index_ceil(tau * static_cast<double>(block_len)); }
  std::int64_t data_per_block() const { return block_len - training_len(); }
  std::int64_t code_len() const { return n_blocks * data_per_block(); }  // N_c
  std::int64_t message_bits() const {  // K
    return index_floor(rate * static_cast<double>(n_blocks) * static_cast<double>(block_len));
  }
  std::int64_t channels() const;  // L
};

// Throws ValidationError; in particular R > 1 - tau cannot fit the message
// into the data slots.
void validate_coding_config(const CodingConfig& cfg);

struct CodingResult {
  double empirical_pe = 0.0;
  std::int64_t errors = 0;
  std::int64_t trials = 0;
  double capacity_estimate = 0.0;  // (1 - tau) * observed identified fraction
};

// Mask over one block's data slots: bit j set iff slot j's channel was
// identified during that block's training draws.  Deterministic in
// (cfg.seed, trial, block), independent of cfg.rate, so rate sweeps sharing
// a seed see identical channels.
BitVec erasure_pattern(const CodingConfig& cfg, std::int64_t trial, std::int64_t block);

// K x N_c dense uniform generator; rows nest across K for coupled rate
// sweeps (row r depends only on (gen_seed, r)).
BitMatrix random_generator_matrix(std::uint64_t gen_seed, std::int64_t k, std::int64_t n_c);

// codeword = message * G.  The seed overload derives G on the fly; throws
// "rate exceeds slot budget" when K > N_c.
BitVec random_linear_encode(const BitVec& message, const BitMatrix& gen);
BitVec random_linear_encode(const BitVec& message, std::uint64_t gen_seed, std::int64_t n_c);

// Solves message * G restricted to unerased slots by online GF(2)
// elimination; empty when the restricted generator has rank < K.  Erased
// positions of `received` are ignored.
std::optional<BitVec> erasure_decode(const BitMatrix& gen, const BitVec& mask,
                                     const BitVec& received);
std::optional<BitVec> erasure_decode(const BitVec& mask, const BitVec& received,
                                     std::uint64_t gen_seed, std::int64_t k);

// Full experiment: per trial draw n_blocks erasure patterns, encode a
// uniform message, decode from the unerased slots, count block errors.
CodingResult run_coding_experiment(const CodingConfig& cfg);

}  // namespace phasekit
