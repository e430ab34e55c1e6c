#include "phasekit/coding.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "phasekit/errors.hpp"
#include "phasekit/kernels.hpp"
#include "phasekit/model.hpp"
#include "phasekit/rng.hpp"

namespace phasekit {
namespace {

// substream tags under one trial
constexpr std::uint64_t kTagGenerator = 0;
constexpr std::uint64_t kTagMessage = 1;
constexpr std::uint64_t kTagErasure = 2;

}  // namespace

std::int64_t CodingConfig::channels() const { return channel_count(a, block_len); }

void validate_coding_config(const CodingConfig& cfg) {
  if (cfg.block_len < 1) throw ValidationError("block length must be >= 1");
  TrainingFraction frac(cfg.tau);
  if (!(cfg.a > 0.0) || !std::isfinite(cfg.a)) throw ValidationError("a must be positive");
  if (cfg.n_blocks < 1) throw ValidationError("block count must be >= 1");
  if (!(cfg.rate > 0.0) || !std::isfinite(cfg.rate)) {
    throw ValidationError("rate must be positive");
  }
  if (cfg.rate > 1.0 - cfg.tau + 1e-12) {
    throw ValidationError("rate exceeds the data-phase budget 1 - tau");
  }
  if (cfg.trials < 1) throw ValidationError("trial count must be >= 1");
  if (cfg.message_bits() > cfg.code_len()) {
    throw ValidationError("rate exceeds slot budget");
  }
}

BitVec erasure_pattern(const CodingConfig& cfg, std::int64_t trial, std::int64_t block) {
  if (trial < 0 || block < 0) throw ValidationError("trial and block indices must be >= 0");
  const std::int64_t T = cfg.training_len();
  const std::int64_t D = cfg.data_per_block();
  const auto L = static_cast<std::uint64_t>(cfg.channels());

  SplitMix64 rng(derive_stream(cfg.seed, {static_cast<std::uint64_t>(trial), kTagErasure,
                                          static_cast<std::uint64_t>(block)}));
  std::vector<char> seen(static_cast<std::size_t>(L), 0);
  for (std::int64_t t = 0; t < T; ++t) seen[rng.next_below(L)] = 1;
  BitVec mask(D);
  for (std::int64_t j = 0; j < D; ++j) {
    if (seen[rng.next_below(L)]) mask.set(j, true);
  }
  return mask;
}

BitMatrix random_generator_matrix(std::uint64_t gen_seed, std::int64_t k, std::int64_t n_c) {
  return random_bit_matrix(gen_seed, k, n_c);
}

BitVec random_linear_encode(const BitVec& message, const BitMatrix& gen) {
  if (message.size() != gen.rows()) throw ValidationError("message length must match rows");
  if (gen.rows() > gen.cols()) throw ValidationError("rate exceeds slot budget");
  BitVec codeword(gen.cols());
  auto out = codeword.words();
  for (std::int64_t r = 0; r < gen.rows(); ++r) {
    if (message.get(r)) kernels::xor_words(out.data(), gen.row(r).data(), out.size());
  }
  return codeword;
}

BitVec random_linear_encode(const BitVec& message, std::uint64_t gen_seed, std::int64_t n_c) {
  if (message.size() > n_c) throw ValidationError("rate exceeds slot budget");
  return random_linear_encode(message, random_generator_matrix(gen_seed, message.size(), n_c));
}

std::optional<BitVec> erasure_decode(const BitMatrix& gen, const BitVec& mask,
                                     const BitVec& received) {
  const std::int64_t K = gen.rows();
  const std::int64_t N = gen.cols();
  if (mask.size() != N || received.size() != N) {
    throw ValidationError("mask and received length must match the code length");
  }
  if (mask.count() < K) return std::nullopt;  // rank is at most the unerased count
  if (K == 0) return BitVec(0);

  // unknowns are the K message bits; each unerased slot u contributes the
  // equation <column u of gen, m> = received[u], i.e. row u of the transpose
  const BitMatrix cols = transpose(gen);
  BitMatrix basis(K, K);  // basis[p] holds a row whose lowest set bit is p
  std::vector<char> occupied(static_cast<std::size_t>(K), 0);
  std::vector<char> aug(static_cast<std::size_t>(K), 0);
  BitVec eq(K);
  std::int64_t pivots = 0;

  for (std::int64_t u = 0; u < N && pivots < K; ++u) {
    if (!mask.get(u)) continue;
    auto src = cols.row(u);
    std::copy(src.begin(), src.end(), eq.words().begin());
    char rhs = received.get(u) ? 1 : 0;
    for (;;) {
      const std::int64_t p = eq.lowest_set_bit();
      if (p < 0) {
        if (rhs) return std::nullopt;  // inconsistent system, no codeword fits
        break;                         // dependent equation
      }
      if (occupied[static_cast<std::size_t>(p)]) {
        kernels::xor_words(eq.words().data(), basis.row(p).data(), eq.words().size());
        rhs = static_cast<char>(rhs ^ aug[static_cast<std::size_t>(p)]);
      } else {
        auto dst = basis.row(p);
        std::copy(eq.words().begin(), eq.words().end(), dst.begin());
        aug[static_cast<std::size_t>(p)] = rhs;
        occupied[static_cast<std::size_t>(p)] = 1;
        ++pivots;
        break;
      }
    }
  }
  if (pivots < K) return std::nullopt;

  // back-substitute from the highest pivot down; message bit p is still
  // zero when row p is folded, so the parity only picks up solved bits
  BitVec message(K);
  for (std::int64_t p = K - 1; p >= 0; --p) {
    const auto parity = kernels::and_parity(basis.row(p).data(), message.words().data(),
                                            message.words().size());
    message.set(p, (static_cast<std::uint64_t>(aug[static_cast<std::size_t>(p)]) ^ parity) != 0);
  }
  return message;
}

std::optional<BitVec> erasure_decode(const BitVec& mask, const BitVec& received,
                                     std::uint64_t gen_seed, std::int64_t k) {
  return erasure_decode(random_generator_matrix(gen_seed, k, mask.size()), mask, received);
}

CodingResult run_coding_experiment(const CodingConfig& cfg) {
  validate_coding_config(cfg);
  const std::int64_t D = cfg.data_per_block();
  const std::int64_t N = cfg.code_len();
  const std::int64_t K = cfg.message_bits();

  std::int64_t errors = 0;
  std::int64_t unerased_total = 0;
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    BitVec mask(N);
    for (std::int64_t b = 0; b < cfg.n_blocks; ++b) {
      const BitVec block_mask = erasure_pattern(cfg, trial, b);
      for (std::int64_t j = 0; j < D; ++j) {
        if (block_mask.get(j)) mask.set(b * D + j, true);
      }
    }
    const std::int64_t unerased = mask.count();
    unerased_total += unerased;
    if (unerased < K) {
      ++errors;  // decode must fail: restricted rank is at most the unerased count
      continue;
    }

    const std::uint64_t gen_seed =
        derive_stream(cfg.seed, {static_cast<std::uint64_t>(trial), kTagGenerator});
    const BitMatrix gen = random_generator_matrix(gen_seed, K, N);

    SplitMix64 msg_rng(
        derive_stream(cfg.seed, {static_cast<std::uint64_t>(trial), kTagMessage}));
    BitVec message(K);
    for (auto& w : message.words()) w = msg_rng.next();
    if (K % 64 != 0 && !message.words().empty()) {
      message.words().back() &= ~0ULL >> (64 - (K % 64));
    }

    BitVec received = random_linear_encode(message, gen);
    for (std::size_t w = 0; w < received.words().size(); ++w) {
      received.words()[w] &= mask.words()[w];  // erased slots carry nothing
    }

    const auto decoded = erasure_decode(gen, mask, received);
    if (!decoded || *decoded != message) ++errors;
  }

  CodingResult res;
  res.errors = errors;
  res.trials = cfg.trials;
  res.empirical_pe = static_cast<double>(errors) / static_cast<double>(cfg.trials);
  res.capacity_estimate = (1.0 - cfg.tau) * static_cast<double>(unerased_total) /
                          (static_cast<double>(cfg.trials) * static_cast<double>(N));
  return res;
}

}  // namespace phasekit
